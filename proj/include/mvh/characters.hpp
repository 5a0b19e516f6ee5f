#pragma once

#include <filesystem>
#include <optional>
#include <vector>

#include "mvh/partitions.hpp"
#include "mvh/report.hpp"

namespace mvh {

// Full integer character table of the symmetric group S_d, rows and columns
// both in canonical partition order.  Built by the border-strip recursion;
// immutable once constructed, safe to share between threads.
class CharacterTable {
public:
    static CharacterTable build(int d);
    // reads the cache file if present and well-formed, otherwise builds and
    // writes it (atomic replace, last writer wins)
    static CharacterTable load_or_build(int d, const std::filesystem::path& cache_dir);

    int degree() const { return d_; }
    const std::vector<Partition>& labels() const { return parts_; }
    int index_of(const Partition& p) const;  // throws if |p| != d

    long long chi(int nu_idx, int mu_idx) const { return table_[nu_idx][mu_idx]; }
    long long chi(const Partition& nu, const Partition& mu) const;

    void save(const std::filesystem::path& cache_dir) const;

private:
    CharacterTable() = default;
    int d_ = 0;
    std::vector<Partition> parts_;
    std::vector<std::vector<long long>> table_;
};

// chi_nu(C(mu)) for |nu| = |mu| (throws on size mismatch)
long long character(const Partition& nu, const Partition& mu);

// dimension of the irreducible labeled by nu: |nu|! / prod of hooks
long long dim_rep(const Partition& nu);

// f_nu(mu) = |C(mu)| chi_nu(mu) / dim R_nu; the scalar by which the class
// sum of type mu acts on R_nu.  Always an integer; non-integrality means a
// character bug and throws.
long long central_character(const Partition& nu, const Partition& mu);

// f_nu on the transposition class, kappa_nu / 2; defined for every degree
// (degree < 2 gives 0)
long long central_character_two(const Partition& nu);

// integrality, conjugate sign rule f_{nu'}(mu) = (-1)^{|mu|-l(mu)} f_nu(mu),
// and f_nu(2) = kappa_nu/2, swept over all nu, mu of degree d
VerificationReport verify_prop_f(int d);

// process-wide cache directory for character tables; precedence:
// explicit set_cache_dir > MVH_CACHE_DIR env > ~/.cache/mvh.
// set_cache_dir(nullopt) disables disk caching (memory only).
void set_cache_dir(std::optional<std::filesystem::path> dir);
std::optional<std::filesystem::path> cache_dir();

// memoized process-wide table accessor (thread-safe)
const CharacterTable& char_table(int d);

}  // namespace mvh
