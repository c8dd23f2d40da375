"""Exact reality and strong reality checks for sl(n, C) and sl(n, H).

Documents go in as dicts (or JSON text) and come back as dicts.
"""

import json

from . import _core
from ._core import (
    Error,
    ExactnessRefusal,
    NonZeroTrace,
    NoWitness,
    ParseError,
    atlas_csv,
    census,
    classify_partition,
    quat_mul,
)

__all__ = [
    "Error",
    "ExactnessRefusal",
    "NonZeroTrace",
    "NoWitness",
    "ParseError",
    "atlas_csv",
    "census",
    "classify",
    "classify_partition",
    "det_H",
    "phi_embed",
    "quat_mul",
    "verify",
    "witness",
]


def _text(document):
    return document if isinstance(document, str) else json.dumps(document)


def _hints(hints):
    if hints is None:
        return ""
    return hints if isinstance(hints, str) else ",".join(hints)


def classify(document, field=None, hints=None, gl_mode=False):
    return json.loads(_core.classify(_text(document), field, _hints(hints), gl_mode))


def witness(document, field=None, hints=None, gl_mode=False, strong=False):
    return json.loads(_core.witness(_text(document), field, _hints(hints), gl_mode, strong))


def verify(document):
    return json.loads(_core.verify(_text(document)))


def det_H(document):
    return _core.det_H(_text(document))


def phi_embed(document):
    return json.loads(_core.phi_embed(_text(document)))
