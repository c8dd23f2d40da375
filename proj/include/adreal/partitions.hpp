#pragma once

// Integer partitions in exponent notation [d_1^{t_1}, ..., d_s^{t_s}] and the
// parity classes that govern strong reality of nilpotent orbits.

#include <cstddef>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace adreal {

struct PartWithMultiplicity {
    std::size_t part;
    std::size_t multiplicity;

    friend bool operator==(const PartWithMultiplicity&, const PartWithMultiplicity&) = default;
};

/// Parts strictly decreasing, every multiplicity >= 1.
class Partition {
public:
    Partition() = default;
    /// Validates strict descent and positive multiplicities; throws std::invalid_argument.
    explicit Partition(std::vector<PartWithMultiplicity> parts);

    /// Builds from a flat list of parts in any order.
    static Partition from_parts(std::vector<std::size_t> parts);

    const std::vector<PartWithMultiplicity>& parts() const { return parts_; }
    /// Flat view, largest part first, each part repeated by its multiplicity.
    std::vector<std::size_t> flatten() const;

    std::size_t total() const;
    std::size_t largest() const { return parts_.empty() ? 0 : parts_.front().part; }
    bool empty() const { return parts_.empty(); }
    std::size_t multiplicity_of(std::size_t part) const;

    /// Every multiplicity multiplied by `factor`.
    Partition scaled_multiplicities(std::size_t factor) const;

    std::string to_string() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend bool operator<(const Partition& a, const Partition& b) { return a.flatten() < b.flatten(); }

private:
    std::vector<PartWithMultiplicity> parts_;
};

struct PartitionClassSets {
    std::set<std::size_t> all;             // N_d
    std::set<std::size_t> even;            // E_d
    std::set<std::size_t> even_2mod4;      // E^2_d
    std::set<std::size_t> odd;             // O_d
    std::set<std::size_t> odd_1mod4;       // O^1_d
    std::set<std::size_t> odd_3mod4;       // O^3_d
};

PartitionClassSets class_sets(const Partition& p);

struct PartitionClassification {
    bool even = false;
    bool very_even = false;
    /// Even, not very even, and the parts congruent to 2 mod 4 have odd total multiplicity.
    bool in_p_tilde_e = false;

    friend bool operator==(const PartitionClassification&, const PartitionClassification&) = default;
};

PartitionClassification classify_partition(const Partition& p);

/// Sum of t_eta over eta = 2 mod 4.
std::size_t two_mod_four_multiplicity(const Partition& p);

inline constexpr std::size_t kDefaultPartitionBound = 40;

/// All partitions of n, each once, in reverse lexicographic order of the flat part list.
std::vector<Partition> enumerate_partitions(std::size_t n, std::size_t bound = kDefaultPartitionBound);

struct Census {
    std::size_t n = 0;
    std::size_t total = 0;
    std::size_t even = 0;
    std::size_t very_even = 0;
    std::size_t p_tilde_e = 0;

    /// Nilpotent orbits in sl(n, C) that are strongly real.
    std::size_t strong_nilpotent_C() const { return total - p_tilde_e; }
    /// Every nilpotent orbit in sl(n, H) is strongly real.
    std::size_t strong_nilpotent_H() const { return total; }

    friend bool operator==(const Census&, const Census&) = default;
};

Census census(std::size_t n, std::size_t bound = kDefaultPartitionBound);

/// CSV with header n,total,even,very_even,p_tilde_e,strong_nilpotent_C,strong_nilpotent_H.
std::string atlas_csv(std::size_t bound);

} // namespace adreal
