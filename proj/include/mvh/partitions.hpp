#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace mvh {

// Integer partition: weakly decreasing positive parts.  The empty partition
// (size 0) is a legal value; it indexes constant terms of power series.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts);

    // (part, part, ..., part), `count` copies
    static Partition rectangle(int part, int count);
    static Partition ones(int count) { return rectangle(1, count); }

    const std::vector<int>& parts() const { return parts_; }
    int size() const;                      // |mu|
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    int part(int i) const { return parts_[i]; }  // 0-based

    std::map<int, int> multiplicities() const;   // j -> m_j(mu)
    Partition conjugate() const;

    // removes one copy of `part` / inserts keeping the order invariant
    Partition remove_part(int part) const;
    Partition add_part(int part) const;

    std::string str() const;               // "(3,1,1)", "()" for empty

    bool operator==(const Partition&) const = default;
    // canonical order: by size, then reverse-lexicographic, so for d=4:
    // (4), (3,1), (2,2), (2,1,1), (1,1,1,1).  Used as the map/table order
    // everywhere, including cache files.
    bool operator<(const Partition& o) const;

private:
    std::vector<int> parts_;
};

struct PartitionStats {
    long long z;            // |Aut| * prod j^{m_j}; centralizer order
    long long aut;          // prod m_j!
    long long kappa;        // sum mu_i (mu_i - 2i + 1), always even
    long long n;            // sum (i-1) mu_i
    long long hook_product; // prod over boxes of h(e)
    Partition conjugate;
    std::vector<int> hooks; // hook multiset, descending
};

std::vector<Partition> enumerate_partitions(int d);  // canonical order, p(d) entries
PartitionStats statistics(const Partition& mu);

long long z_order(const Partition& mu);
long long aut_order(const Partition& mu);
long long kappa(const Partition& mu);
long long n_stat(const Partition& mu);
std::vector<int> hook_lengths(const Partition& mu);  // descending

// Multiplying a permutation of cycle type mu by a transposition either joins
// two cycles or cuts one; partners and multiplicities over all |mu|(|mu|-1)/2
// transpositions:
//   join of parts i<j:  i*j*m_i*m_j        join of i=j: i^2*m_i*(m_i-1)/2
//   cut of i+j, i<j:    (i+j)*m_{i+j}      cut of 2i:   i*m_{2i}
struct NeighborSet {
    std::vector<std::pair<Partition, long long>> joins;  // length l-1
    std::vector<std::pair<Partition, long long>> cuts;   // length l+1
    long long total() const;
};

NeighborSet cut_join_neighbors(const Partition& mu);  // throws on empty mu

}  // namespace mvh
