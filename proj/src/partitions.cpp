#include "mvh/partitions.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace mvh {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
}

Partition::Partition(std::initializer_list<int> parts)
    : Partition(std::vector<int>(parts)) {}

Partition Partition::rectangle(int part, int count) {
    if (count < 0) throw std::invalid_argument("negative part count");
    if (count > 0 && part <= 0) throw std::invalid_argument("parts must be positive");
    return Partition(std::vector<int>(count, part));
}

int Partition::size() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::map<int, int> Partition::multiplicities() const {
    std::map<int, int> m;
    for (int p : parts_) ++m[p];
    return m;
}

Partition Partition::conjugate() const {
    std::vector<int> c;
    if (!parts_.empty()) {
        c.resize(parts_[0]);
        for (int j = 0; j < parts_[0]; ++j) {
            int cnt = 0;
            for (int p : parts_)
                if (p > j) ++cnt;
            c[j] = cnt;
        }
    }
    return Partition(std::move(c));
}

Partition Partition::remove_part(int part) const {
    auto v = parts_;
    auto it = std::find(v.begin(), v.end(), part);
    if (it == v.end()) throw std::invalid_argument("part not present");
    v.erase(it);
    return Partition(std::move(v));
}

Partition Partition::add_part(int part) const {
    if (part <= 0) throw std::invalid_argument("parts must be positive");
    auto v = parts_;
    auto it = std::upper_bound(v.begin(), v.end(), part, std::greater<int>());
    v.insert(it, part);
    return Partition(std::move(v));
}

std::string Partition::str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts_[i]);
    }
    return s + ")";
}

bool Partition::operator<(const Partition& o) const {
    int a = size(), b = o.size();
    if (a != b) return a < b;
    // reverse-lexicographic: lexicographically larger part list comes first
    return std::lexicographical_compare(o.parts_.begin(), o.parts_.end(),
                                        parts_.begin(), parts_.end());
}

namespace {

void emit(int rest, int maxpart, std::vector<int>& acc, std::vector<Partition>& out) {
    if (rest == 0) {
        out.emplace_back(acc);
        return;
    }
    for (int first = std::min(rest, maxpart); first >= 1; --first) {
        acc.push_back(first);
        emit(rest - first, first, acc, out);
        acc.pop_back();
    }
}

long long factorial_ll(int n) {
    long long r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

}  // namespace

std::vector<Partition> enumerate_partitions(int d) {
    if (d < 0) throw std::invalid_argument("negative partition size");
    std::vector<Partition> out;
    std::vector<int> acc;
    emit(d, d == 0 ? 1 : d, acc, out);
    return out;
}

long long z_order(const Partition& mu) {
    long long z = 1;
    for (auto [j, m] : mu.multiplicities()) {
        z *= factorial_ll(m);
        for (int t = 0; t < m; ++t) z *= j;
    }
    return z;
}

long long aut_order(const Partition& mu) {
    long long a = 1;
    for (auto [j, m] : mu.multiplicities()) a *= factorial_ll(m);
    return a;
}

long long kappa(const Partition& mu) {
    long long k = 0;
    const auto& p = mu.parts();
    for (std::size_t i = 0; i < p.size(); ++i)
        k += static_cast<long long>(p[i]) * (p[i] - 2 * static_cast<long long>(i + 1) + 1);
    return k;
}

long long n_stat(const Partition& mu) {
    long long n = 0;
    const auto& p = mu.parts();
    for (std::size_t i = 0; i < p.size(); ++i)
        n += static_cast<long long>(i) * p[i];
    return n;
}

std::vector<int> hook_lengths(const Partition& mu) {
    std::vector<int> hooks;
    const auto& p = mu.parts();
    const Partition conj = mu.conjugate();
    const auto& q = conj.parts();
    for (std::size_t i = 0; i < p.size(); ++i)
        for (int j = 0; j < p[i]; ++j)
            hooks.push_back(p[i] + q[j] - static_cast<int>(i) - j - 1);
    std::sort(hooks.begin(), hooks.end(), std::greater<int>());
    return hooks;
}

PartitionStats statistics(const Partition& mu) {
    PartitionStats s;
    s.z = z_order(mu);
    s.aut = aut_order(mu);
    s.kappa = kappa(mu);
    s.n = n_stat(mu);
    s.conjugate = mu.conjugate();
    s.hooks = hook_lengths(mu);
    s.hook_product = 1;
    for (int h : s.hooks) s.hook_product *= h;
    return s;
}

long long NeighborSet::total() const {
    long long t = 0;
    for (auto& [p, m] : joins) t += m;
    for (auto& [p, m] : cuts) t += m;
    return t;
}

NeighborSet cut_join_neighbors(const Partition& mu) {
    if (mu.empty())
        throw std::invalid_argument("empty partition has no conjugacy class action");
    NeighborSet ns;
    auto mult = mu.multiplicities();
    // joins: replace parts {i,j} by i+j
    for (auto it = mult.begin(); it != mult.end(); ++it) {
        auto [i, mi] = *it;
        if (mi >= 2)
            ns.joins.emplace_back(mu.remove_part(i).remove_part(i).add_part(2 * i),
                                  static_cast<long long>(i) * i * mi * (mi - 1) / 2);
        for (auto jt = std::next(it); jt != mult.end(); ++jt) {
            auto [j, mj] = *jt;
            ns.joins.emplace_back(mu.remove_part(i).remove_part(j).add_part(i + j),
                                  static_cast<long long>(i) * j * mi * mj);
        }
    }
    // cuts: replace a part s by {i, s-i}
    for (auto [s, ms] : mult) {
        for (int i = 1; 2 * i <= s; ++i) {
            int j = s - i;
            long long m = (i == j) ? static_cast<long long>(i) * ms
                                   : static_cast<long long>(s) * ms;
            ns.cuts.emplace_back(mu.remove_part(s).add_part(i).add_part(j), m);
        }
    }
    return ns;
}

}  // namespace mvh
