#pragma once

#include "oracles.hpp"

#include <initializer_list>
#include <string>

namespace helpers {

using namespace adreal;

inline MatrixC mc(std::initializer_list<std::initializer_list<const char*>> rows)
{
    MatrixC m(rows.size(), rows.begin()->size());
    std::size_t i = 0;
    for (const auto& r : rows) {
        std::size_t j = 0;
        for (const char* e : r)
            m(i, j++) = parse_gaussian(e);
        ++i;
    }
    return m;
}

inline MatrixH mh(std::initializer_list<std::initializer_list<const char*>> rows)
{
    MatrixH m(rows.size(), rows.begin()->size());
    std::size_t i = 0;
    for (const auto& r : rows) {
        std::size_t j = 0;
        for (const char* e : r)
            m(i, j++) = parse_quaternion(e);
        ++i;
    }
    return m;
}

inline Partition part(std::vector<std::size_t> flat) { return Partition::from_parts(std::move(flat)); }

inline SpectralDatum datum(const char* lambda, std::vector<std::size_t> flat)
{
    Partition p = part(std::move(flat));
    return {parse_gaussian(lambda), p.total(), p};
}

} // namespace helpers
