import pytest

import adreal

EX = {"field": "H", "entries": [["i", "1"], ["0", "i"]]}


def test_classify_quaternionic_example():
    report = adreal.classify(EX)
    assert report["real"] is True
    assert report["stronglyReal"] is False
    assert report["reason"] == "OddImaginaryMultiplicity"


def test_classify_spectral_document():
    doc = {"field": "C", "data": [{"lambda": "0", "partition": [[2, 1]]}]}
    assert adreal.classify(doc)["reason"] == "ZeroPartitionObstruction"
    assert adreal.classify(doc, field="H")["stronglyReal"] is True


def test_witness_round_trip():
    x = {
        "field": "H",
        "entries": [["i", "1", "0", "0"], ["0", "i", "0", "0"], ["0", "0", "i", "1"], ["0", "0", "0", "i"]],
    }
    cert = adreal.witness(x, strong=True)
    assert cert["flags"] == {"conjugatesToNegative": True, "involutive": True, "special": True}
    assert adreal.verify(cert)["claimsHold"] is True


def test_errors():
    with pytest.raises(adreal.NoWitness) as info:
        adreal.witness({"entries": [[0, 1], [0, 0]]}, strong=True)
    assert info.value.args[1] == "ZeroPartitionObstruction"
    with pytest.raises(adreal.ParseError):
        adreal.classify("{")
    with pytest.raises(adreal.ExactnessRefusal):
        adreal.classify({"entries": [[0, 1], [2, 0]]})
    with pytest.raises(adreal.NonZeroTrace):
        adreal.classify({"entries": [[1, 0], [0, 1]]})
    assert adreal.classify({"entries": [[1, 0], [0, 1]]}, gl_mode=True)["real"] is False


def test_hints():
    report = adreal.classify({"entries": [[0, 1], [-1, 0]]}, hints=["i", "-i"])
    assert [d["lambda"] for d in report["spectrum"]] == ["-i", "i"]


def test_partitions_and_helpers():
    assert adreal.census(6)["p_tilde_e"] == 3
    assert adreal.classify_partition([2]) == {"even": True, "very_even": False, "in_p_tilde_e": True}
    assert adreal.atlas_csv(2).splitlines()[2] == "2,2,1,0,1,1,2"
    assert adreal.quat_mul("i", "j") == "k"
    assert adreal.det_H({"field": "H", "entries": [["j"]]}) == "1"
    assert adreal.phi_embed({"field": "H", "entries": [["j"]]})["entries"] == [["0", "1"], ["-1", "0"]]
