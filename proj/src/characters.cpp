#include "mvh/characters.hpp"

#include <unistd.h>

#include "mvh/coeffring.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace mvh {

namespace {

// Border-strip recursion on beta-numbers.  beta_i = nu_i + (L-1-i) is a
// strictly decreasing sequence; removing a strip of length k means moving
// one beta number down by k into an unoccupied slot, with sign (-1)^(number
// of occupied slots jumped over).  Largest part of mu is consumed first.
using Key = std::pair<std::vector<int>, std::vector<int>>;

long long mn(const std::vector<int>& nu, const std::vector<int>& mu,
             std::map<Key, long long>& memo) {
    if (mu.empty()) return nu.empty() ? 1 : 0;
    if (nu.empty()) return 0;
    Key key{nu, mu};
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    const int L = static_cast<int>(nu.size());
    std::vector<int> beta(L);
    for (int i = 0; i < L; ++i) beta[i] = nu[i] + (L - 1 - i);
    const int k = mu[0];
    const std::vector<int> rest(mu.begin() + 1, mu.end());

    long long total = 0;
    for (int i = 0; i < L; ++i) {
        int t = beta[i] - k;
        if (t < 0) continue;
        if (std::find(beta.begin(), beta.end(), t) != beta.end()) continue;
        int height = 0;
        for (int b : beta)
            if (b > t && b < beta[i]) ++height;
        auto nb = beta;
        nb[i] = t;
        std::sort(nb.begin(), nb.end(), std::greater<int>());
        std::vector<int> next;
        for (int m = 0; m < L; ++m) {
            int part = nb[m] - (L - 1 - m);
            if (part > 0) next.push_back(part);
        }
        long long sub = mn(next, rest, memo);
        total += (height % 2 == 0) ? sub : -sub;
    }
    memo[key] = total;
    return total;
}

std::map<Key, long long>& mn_memo() {
    static std::map<Key, long long> m;
    return m;
}

std::mutex& mn_mutex() {
    static std::mutex m;
    return m;
}

long long factorial_ll(int n) {
    long long r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

std::filesystem::path default_cache_dir() {
    if (const char* env = std::getenv("MVH_CACHE_DIR")) return env;
    if (const char* xdg = std::getenv("XDG_CACHE_HOME"))
        return std::filesystem::path(xdg) / "mvh";
    if (const char* home = std::getenv("HOME"))
        return std::filesystem::path(home) / ".cache" / "mvh";
    return std::filesystem::temp_directory_path() / "mvh-cache";
}

struct CacheConfig {
    std::mutex mu;
    bool overridden = false;
    std::optional<std::filesystem::path> dir;
};

CacheConfig& cache_config() {
    static CacheConfig c;
    return c;
}

}  // namespace

void set_cache_dir(std::optional<std::filesystem::path> dir) {
    auto& c = cache_config();
    std::lock_guard lk(c.mu);
    c.overridden = true;
    c.dir = std::move(dir);
}

std::optional<std::filesystem::path> cache_dir() {
    auto& c = cache_config();
    std::lock_guard lk(c.mu);
    if (c.overridden) return c.dir;
    return default_cache_dir();
}

long long character(const Partition& nu, const Partition& mu) {
    if (nu.size() != mu.size())
        throw std::invalid_argument("character: |nu| != |mu|");
    std::lock_guard lk(mn_mutex());
    return mn(nu.parts(), mu.parts(), mn_memo());
}

long long dim_rep(const Partition& nu) {
    // divide the full hook product out of d! in one exact step; intermediate
    // quotients by single hooks need not be integral
    mpz_class prod = 1;
    for (int h : hook_lengths(nu)) prod *= h;
    mpz_class d = factorial_z(nu.size()) / prod;
    return static_cast<long long>(d.get_si());
}

long long central_character(const Partition& nu, const Partition& mu) {
    long long cls = factorial_ll(mu.size()) / z_order(mu);
    long long dim = dim_rep(nu);
    long long num = cls * character(nu, mu);
    if (num % dim != 0)
        throw std::logic_error("central character not integral for nu=" + nu.str() +
                               " mu=" + mu.str());
    return num / dim;
}

long long central_character_two(const Partition& nu) {
    long long k = kappa(nu);
    return k / 2;
}

CharacterTable CharacterTable::build(int d) {
    CharacterTable t;
    t.d_ = d;
    t.parts_ = enumerate_partitions(d);
    const int n = static_cast<int>(t.parts_.size());
    t.table_.assign(n, std::vector<long long>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            t.table_[i][j] = character(t.parts_[i], t.parts_[j]);
    return t;
}

int CharacterTable::index_of(const Partition& p) const {
    auto it = std::lower_bound(parts_.begin(), parts_.end(), p);
    if (it == parts_.end() || !(*it == p))
        throw std::invalid_argument("partition has wrong degree for this table");
    return static_cast<int>(it - parts_.begin());
}

long long CharacterTable::chi(const Partition& nu, const Partition& mu) const {
    return table_[index_of(nu)][index_of(mu)];
}

void CharacterTable::save(const std::filesystem::path& dir) const {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) return;  // caching is best-effort
    auto path = dir / ("chartable-" + std::to_string(d_) + ".txt");
    auto tmp = path;
    tmp += ".tmp" + std::to_string(::getpid());
    {
        std::ofstream out(tmp);
        if (!out) return;
        out << "chartable v1 d=" << d_ << "\n";
        for (const auto& row : table_) {
            for (std::size_t j = 0; j < row.size(); ++j)
                out << (j ? " " : "") << row[j];
            out << "\n";
        }
    }
    std::filesystem::rename(tmp, path, ec);
    if (ec) std::filesystem::remove(tmp, ec);
}

CharacterTable CharacterTable::load_or_build(int d, const std::filesystem::path& dir) {
    auto path = dir / ("chartable-" + std::to_string(d) + ".txt");
    std::ifstream in(path);
    if (in) {
        std::string header;
        std::getline(in, header);
        if (header == "chartable v1 d=" + std::to_string(d)) {
            CharacterTable t;
            t.d_ = d;
            t.parts_ = enumerate_partitions(d);
            const int n = static_cast<int>(t.parts_.size());
            t.table_.assign(n, std::vector<long long>(n, 0));
            bool good = true;
            for (int i = 0; good && i < n; ++i) {
                std::string line;
                if (!std::getline(in, line)) { good = false; break; }
                std::istringstream ls(line);
                for (int j = 0; j < n; ++j)
                    if (!(ls >> t.table_[i][j])) { good = false; break; }
            }
            if (good) return t;
        }
    }
    auto t = build(d);
    t.save(dir);
    return t;
}

const CharacterTable& char_table(int d) {
    static std::mutex mu;
    static std::map<int, std::unique_ptr<CharacterTable>> tables;
    std::lock_guard lk(mu);
    auto it = tables.find(d);
    if (it == tables.end()) {
        auto dir = cache_dir();
        auto t = dir ? CharacterTable::load_or_build(d, *dir) : CharacterTable::build(d);
        it = tables.emplace(d, std::make_unique<CharacterTable>(std::move(t))).first;
    }
    return *it->second;
}

VerificationReport verify_prop_f(int d) {
    VerificationReport rep;
    rep.suite = "prop-f d=" + std::to_string(d);
    const auto& tab = char_table(d);
    const auto& parts = tab.labels();

    bool integral = true, conj_sign = true, two_kappa = true;
    std::string w_int, w_conj, w_two;
    std::vector<int> conj_idx(parts.size());
    for (std::size_t i = 0; i < parts.size(); ++i)
        conj_idx[i] = tab.index_of(parts[i].conjugate());

    Partition two_class;
    if (d >= 2) {
        std::vector<int> v{2};
        v.insert(v.end(), d - 2, 1);
        two_class = Partition(v);
    }

    for (std::size_t i = 0; i < parts.size(); ++i) {
        long long dim = dim_rep(parts[i]);
        for (std::size_t j = 0; j < parts.size(); ++j) {
            long long cls = factorial_ll(d) / z_order(parts[j]);
            long long num = cls * tab.chi(i, j);
            if (num % dim != 0) {
                integral = false;
                if (w_int.empty())
                    w_int = "nu=" + parts[i].str() + " mu=" + parts[j].str();
                continue;
            }
            long long f = num / dim;
            long long fc = cls * tab.chi(conj_idx[i], j) / dim_rep(parts[conj_idx[i]]);
            int sign = (d - parts[j].length()) % 2 == 0 ? 1 : -1;
            if (fc != sign * f) {
                conj_sign = false;
                if (w_conj.empty())
                    w_conj = "nu=" + parts[i].str() + " mu=" + parts[j].str();
            }
        }
        if (d >= 2) {
            long long f2 = central_character(parts[i], two_class);
            if (f2 != kappa(parts[i]) / 2) {
                two_kappa = false;
                if (w_two.empty()) w_two = "nu=" + parts[i].str();
            }
        }
    }
    rep.add("every f_nu(mu) integral", integral, w_int);
    rep.add("f_{nu'}(mu) = (-1)^{|mu|-l(mu)} f_nu(mu)", conj_sign, w_conj);
    rep.add("f_nu(2) = kappa_nu/2", two_kappa, w_two);
    return rep;
}

}  // namespace mvh
