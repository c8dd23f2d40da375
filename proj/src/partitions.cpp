#include "adreal/partitions.hpp"

#include "adreal/errors.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

namespace adreal {

Partition::Partition(std::vector<PartWithMultiplicity> parts) : parts_(std::move(parts))
{
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i].part == 0 || parts_[i].multiplicity == 0)
            throw std::invalid_argument("partition parts and multiplicities must be positive");
        if (i > 0 && parts_[i - 1].part <= parts_[i].part)
            throw std::invalid_argument("partition parts must be strictly decreasing");
    }
}

Partition Partition::from_parts(std::vector<std::size_t> parts)
{
    std::map<std::size_t, std::size_t, std::greater<>> counts;
    for (auto p : parts) {
        if (p == 0)
            throw std::invalid_argument("partition parts must be positive");
        ++counts[p];
    }
    std::vector<PartWithMultiplicity> out;
    for (const auto& [part, mult] : counts)
        out.push_back({part, mult});
    return Partition(std::move(out));
}

std::vector<std::size_t> Partition::flatten() const
{
    std::vector<std::size_t> out;
    for (const auto& [part, mult] : parts_)
        out.insert(out.end(), mult, part);
    return out;
}

std::size_t Partition::total() const
{
    std::size_t n = 0;
    for (const auto& [part, mult] : parts_)
        n += part * mult;
    return n;
}

std::size_t Partition::multiplicity_of(std::size_t part) const
{
    for (const auto& pm : parts_)
        if (pm.part == part)
            return pm.multiplicity;
    return 0;
}

Partition Partition::scaled_multiplicities(std::size_t factor) const
{
    auto parts = parts_;
    for (auto& pm : parts)
        pm.multiplicity *= factor;
    return Partition(std::move(parts));
}

std::string Partition::to_string() const
{
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i)
            os << ',';
        os << parts_[i].part;
        if (parts_[i].multiplicity > 1)
            os << '^' << parts_[i].multiplicity;
    }
    os << ']';
    return os.str();
}

PartitionClassSets class_sets(const Partition& p)
{
    PartitionClassSets s;
    for (const auto& [eta, t] : p.parts()) {
        s.all.insert(eta);
        if (eta % 2 == 0) {
            s.even.insert(eta);
            if (eta % 4 == 2)
                s.even_2mod4.insert(eta);
        } else {
            s.odd.insert(eta);
            (eta % 4 == 1 ? s.odd_1mod4 : s.odd_3mod4).insert(eta);
        }
    }
    return s;
}

std::size_t two_mod_four_multiplicity(const Partition& p)
{
    std::size_t sum = 0;
    for (const auto& [eta, t] : p.parts())
        if (eta % 4 == 2)
            sum += t;
    return sum;
}

PartitionClassification classify_partition(const Partition& p)
{
    PartitionClassification c;
    c.even = !p.empty() && std::all_of(p.parts().begin(), p.parts().end(),
                                       [](const PartWithMultiplicity& pm) { return pm.part % 2 == 0; });
    c.very_even = c.even && std::all_of(p.parts().begin(), p.parts().end(),
                                        [](const PartWithMultiplicity& pm) { return pm.multiplicity % 2 == 0; });
    c.in_p_tilde_e = c.even && !c.very_even && two_mod_four_multiplicity(p) % 2 == 1;
    return c;
}

namespace {

void generate(std::size_t remaining, std::size_t max_part, std::vector<std::size_t>& current,
              std::vector<Partition>& out)
{
    if (remaining == 0) {
        out.push_back(Partition::from_parts(current));
        return;
    }
    for (std::size_t part = std::min(remaining, max_part); part >= 1; --part) {
        current.push_back(part);
        generate(remaining - part, part, current, out);
        current.pop_back();
    }
}

void check_bound(std::size_t n, std::size_t bound)
{
    if (n == 0)
        throw std::invalid_argument("partitions of 0 are not enumerated");
    if (n > bound)
        throw BoundExceeded("n = " + std::to_string(n) + " exceeds the enumeration bound " + std::to_string(bound));
}

} // namespace

std::vector<Partition> enumerate_partitions(std::size_t n, std::size_t bound)
{
    check_bound(n, bound);
    std::vector<Partition> out;
    std::vector<std::size_t> current;
    generate(n, n, current, out);
    return out;
}

Census census(std::size_t n, std::size_t bound)
{
    Census c;
    c.n = n;
    for (const auto& p : enumerate_partitions(n, bound)) {
        const auto k = classify_partition(p);
        ++c.total;
        c.even += k.even;
        c.very_even += k.very_even;
        c.p_tilde_e += k.in_p_tilde_e;
    }
    return c;
}

std::string atlas_csv(std::size_t bound)
{
    check_bound(bound, kDefaultPartitionBound);
    std::ostringstream os;
    os << "n,total,even,very_even,p_tilde_e,strong_nilpotent_C,strong_nilpotent_H\n";
    for (std::size_t n = 1; n <= bound; ++n) {
        const Census c = census(n, bound);
        os << c.n << ',' << c.total << ',' << c.even << ',' << c.very_even << ',' << c.p_tilde_e << ','
           << c.strong_nilpotent_C() << ',' << c.strong_nilpotent_H() << '\n';
    }
    return os.str();
}

} // namespace adreal
