#include "gti/cochain.hpp"

#include <array>
#include <mutex>
#include <numeric>

namespace gti {

struct Cochain::Expr {
    explicit Expr(Fn f) : fn(std::move(f)) {}
    Fn fn;
    UnitScalar eval(std::span<const Elem> args) const { return fn(args); }
};

Cochain::Cochain(int arity, GroupPtr group, std::shared_ptr<const Expr> expr)
    : arity_(arity), group_(std::move(group)), expr_(std::move(expr)) {
    if (arity_ < 1 || arity_ > 4) throw ContractError("cochain arity must be between 1 and 4");
}

UnitScalar Cochain::eval(std::span<const Elem> args) const {
    if (static_cast<int>(args.size()) != arity_) throw ContractError("wrong number of cochain arguments");
    for (Elem a : args) {
        if (a < 0 || a >= group_->order()) throw ContractError("cochain argument out of range");
        if (a == group_->identity()) return UnitScalar::one(); // normalization
    }
    return expr_->eval(args);
}

UnitScalar Cochain::operator()(Elem a) const {
    std::array<Elem, 1> v{a};
    return eval(v);
}
UnitScalar Cochain::operator()(Elem a, Elem b) const {
    std::array<Elem, 2> v{a, b};
    return eval(v);
}
UnitScalar Cochain::operator()(Elem a, Elem b, Elem c) const {
    std::array<Elem, 3> v{a, b, c};
    return eval(v);
}
UnitScalar Cochain::operator()(Elem a, Elem b, Elem c, Elem d) const {
    std::array<Elem, 4> v{a, b, c, d};
    return eval(v);
}

Cochain Cochain::trivial(GroupPtr g, int arity) {
    return from_function(std::move(g), arity, [](std::span<const Elem>) { return UnitScalar::one(); });
}

Cochain Cochain::from_function(GroupPtr g, int arity, Fn fn) {
    return Cochain(arity, std::move(g), std::make_shared<Expr>(std::move(fn)));
}

uint64_t Cochain::pack_key(std::span<const Elem> args) {
    uint64_t key = 0;
    for (Elem a : args) key = (key << 16) | static_cast<uint64_t>(a + 1);
    return key;
}

Cochain Cochain::from_table(GroupPtr g, int arity, Table entries) {
    auto table = std::make_shared<Table>(std::move(entries));
    return from_function(std::move(g), arity, [table](std::span<const Elem> args) {
        auto it = table->find(pack_key(args));
        return it == table->end() ? UnitScalar::one() : it->second;
    });
}

Cochain Cochain::cyclic_kappa(GroupPtr zn, long long t) {
    if (!zn->is_cyclic_canonical()) throw ContractError("cyclic cocycle needs a canonical cyclic group");
    long long n = zn->order();
    return from_function(std::move(zn), 3, [n, t](std::span<const Elem> args) {
        long long j = args[0], k = args[1], l = args[2];
        return UnitScalar::from_exponent(t * l * (j + k - (j + k) % n), n * n);
    });
}

Cochain Cochain::cyclic_lambda(GroupPtr zn, long long k) {
    if (!zn->is_cyclic_canonical()) throw ContractError("cyclic cochain needs a canonical cyclic group");
    long long n = zn->order();
    long long kk = ((k % n) + n) % n;
    return from_function(std::move(zn), 1, [n, kk](std::span<const Elem> args) {
        return UnitScalar::from_exponent(kk * args[0], n * n);
    });
}

Cochain Cochain::inflate(Cochain inner, GroupHom p) {
    if (inner.group() != p.target) throw ContractError("inflation target group mismatch");
    int arity = inner.arity();
    GroupPtr g = p.source;
    return from_function(std::move(g), arity, [inner, p = std::move(p)](std::span<const Elem> args) {
        std::array<Elem, 4> mapped{};
        for (size_t i = 0; i < args.size(); ++i) mapped[i] = p(args[i]);
        return inner.eval(std::span<const Elem>(mapped.data(), args.size()));
    });
}

Cochain Cochain::double_cocycle(const Cochain& omega, const DirectProduct& prod) {
    if (omega.arity() != 3 || omega.group() != prod.left || prod.left != prod.right)
        throw ContractError("double construction needs a 3-cochain on the common factor");
    return inflate(omega, prod.proj_left) * inflate(omega, prod.proj_right).inverse();
}

Cochain Cochain::operator*(const Cochain& o) const {
    if (arity_ != o.arity_ || group_ != o.group_) throw ContractError("cochain product domain mismatch");
    Cochain a = *this, b = o;
    return from_function(group_, arity_,
                         [a, b](std::span<const Elem> args) { return a.eval(args) * b.eval(args); });
}

Cochain Cochain::inverse() const {
    Cochain a = *this;
    return from_function(group_, arity_, [a](std::span<const Elem> args) { return a.eval(args).inverse(); });
}

Cochain Cochain::pow(long long k) const {
    Cochain a = *this;
    return from_function(group_, arity_, [a, k](std::span<const Elem> args) { return a.eval(args).pow(k); });
}

Cochain Cochain::boundary() const {
    if (arity_ >= 4) throw ContractError("coboundary only defined up to arity 3");
    Cochain a = *this;
    int n = arity_;
    GroupPtr g = group_;
    return from_function(group_, n + 1, [a, n, g](std::span<const Elem> args) {
        UnitScalar acc = UnitScalar::one();
        std::array<Elem, 4> face{};
        for (int i = 0; i <= n + 1; ++i) {
            int w = 0;
            for (int j = 0; j <= n; ++j) {
                if (i == 0 && j == 0) continue; // drop first argument
                if (j == i - 1 && i >= 1 && i <= n) {
                    face[w++] = g->mul(args[j], args[j + 1]);
                    ++j;
                } else if (i == n + 1 && j == n) {
                    continue; // drop last argument
                } else {
                    face[w++] = args[j];
                }
            }
            UnitScalar v = a.eval(std::span<const Elem>(face.data(), static_cast<size_t>(n)));
            acc *= (i % 2 == 0) ? v : v.inverse();
        }
        return acc;
    });
}

Cochain Cochain::memoized() const {
    struct Cache {
        std::mutex mu;
        Table values;
    };
    auto cache = std::make_shared<Cache>();
    Cochain a = *this;
    return from_function(group_, arity_, [a, cache](std::span<const Elem> args) {
        uint64_t key = pack_key(args);
        {
            std::scoped_lock lk(cache->mu);
            auto it = cache->values.find(key);
            if (it != cache->values.end()) return it->second;
        }
        UnitScalar v = a.eval(args);
        std::scoped_lock lk(cache->mu);
        cache->values.emplace(key, v);
        return v;
    });
}

namespace {

template <typename Body>
void for_each_tuple(int order, int arity, Body body) {
    std::array<Elem, 4> t{};
    std::function<void(int)> rec = [&](int pos) {
        if (pos == arity) {
            body(std::span<const Elem>(t.data(), static_cast<size_t>(arity)));
            return;
        }
        for (Elem x = 0; x < order; ++x) {
            t[pos] = x;
            rec(pos + 1);
        }
    };
    rec(0);
}

} // namespace

Cochain::Table Cochain::materialize_table() const {
    double count = 1;
    for (int i = 0; i < arity_; ++i) count *= group_->order();
    if (count > 1e7) throw SizeLimitError("dense cochain table would be too large");
    Table out;
    for_each_tuple(group_->order(), arity_, [&](std::span<const Elem> args) {
        UnitScalar v = eval(args);
        if (!v.is_one()) out.emplace(pack_key(args), v);
    });
    return out;
}

bool is_cocycle(const Cochain& a) {
    if (a.arity() > 3) throw ContractError("cocycle check only up to arity 3");
    Cochain d = a.boundary();
    bool ok = true;
    for_each_tuple(a.group()->order(), a.arity() + 1, [&](std::span<const Elem> args) {
        if (ok && !d.eval(args).is_one()) ok = false;
    });
    return ok;
}

bool is_adapted(const Cochain& omega, const Subgroup& h) {
    if (omega.arity() != 3) throw ContractError("adaptedness is a property of 3-cochains");
    if (omega.group() != h.parent()) throw ContractError("subgroup from a different group");
    int n = omega.group()->order();
    for (Elem x = 0; x < n; ++x)
        for (Elem y = 0; y < n; ++y)
            for (Elem k : h.elements())
                if (!omega(x, y, k).is_one()) return false;
    return true;
}

bool is_trivial_on(const Cochain& a, const Subgroup& h) {
    bool ok = true;
    std::array<Elem, 4> t{};
    std::function<void(int)> rec = [&](int pos) {
        if (!ok) return;
        if (pos == a.arity()) {
            if (!a.eval(std::span<const Elem>(t.data(), static_cast<size_t>(a.arity()))).is_one()) ok = false;
            return;
        }
        for (Elem x : h.elements()) {
            t[pos] = x;
            rec(pos + 1);
        }
    };
    rec(0);
    return ok;
}

// ---------------------------------------------------------------------------
// Coboundary solving: the exponent-level system d(theta) = beta is linear
// over Z/L' where L' = lcm of beta's denominators times |H|. It is solved
// separately modulo each prime power of L' by diagonalization (valid over
// Z/p^e when pivots of minimal p-valuation are chosen), then recombined.

namespace {

long long mod_pow_inv(long long a, long long m) {
    // inverse of a mod m for gcd(a,m)=1, extended Euclid
    long long t = 0, newt = 1, r = m, newr = a % m;
    while (newr != 0) {
        long long q = r / newr;
        std::swap(t, newt);
        newt -= q * t;
        std::swap(r, newr);
        newr -= q * r;
    }
    if (t < 0) t += m;
    return t;
}

struct ModSolver {
    // Solve A x = b (mod q), q = p^e. Returns false if inconsistent.
    static bool solve(std::vector<std::vector<long long>> a, std::vector<long long> b, long long p,
                      long long q, std::vector<long long>& x) {
        size_t m = a.size();
        size_t n = m ? a[0].size() : 0;
        auto red = [q](long long v) {
            v %= q;
            if (v < 0) v += q;
            return v;
        };
        for (auto& row : a)
            for (auto& v : row) v = red(v);
        for (auto& v : b) v = red(v);

        auto val = [p, q](long long v) {
            if (v == 0) return 64;
            int c = 0;
            while (v % p == 0) {
                v /= p;
                ++c;
            }
            return c;
        };

        // Column transform accumulator: x = V y.
        std::vector<std::vector<long long>> V(n, std::vector<long long>(n, 0));
        for (size_t i = 0; i < n; ++i) V[i][i] = 1;

        size_t rank = 0;
        std::vector<long long> diag;
        for (; rank < n && rank < m; ++rank) {
            // pivot of minimal p-valuation in the remaining block
            size_t pi = m, pj = n;
            int best = 64;
            for (size_t i = rank; i < m && best > 0; ++i)
                for (size_t j = rank; j < n; ++j) {
                    int v = val(a[i][j]);
                    if (v < best) {
                        best = v;
                        pi = i;
                        pj = j;
                        if (best == 0) break;
                    }
                }
            if (pi == m || best == 64) break; // remaining block is zero
            std::swap(a[rank], a[pi]);
            std::swap(b[rank], b[pi]);
            for (size_t i = 0; i < m; ++i) std::swap(a[i][rank], a[i][pj]);
            std::swap(V[rank], V[pj]);

            long long piv = a[rank][rank];
            long long pv = 1;
            for (int i = 0; i < best; ++i) pv *= p;
            long long unit = piv / pv;
            long long uinv = mod_pow_inv(red(unit), q);

            for (size_t i = 0; i < m; ++i) {
                if (i == rank || a[i][rank] == 0) continue;
                long long f = red(static_cast<__int128>(a[i][rank] / pv) * uinv % q);
                for (size_t j = rank; j < n; ++j)
                    a[i][j] = red(a[i][j] - static_cast<__int128>(f) * a[rank][j] % q);
                b[i] = red(b[i] - static_cast<__int128>(f) * b[rank] % q);
            }
            for (size_t j = 0; j < n; ++j) {
                if (j == rank || a[rank][j] == 0) continue;
                long long f = red(static_cast<__int128>(a[rank][j] / pv) * uinv % q);
                // column op: col_j -= f * col_rank; mirrored in V
                for (size_t i = 0; i < m; ++i)
                    a[i][j] = red(a[i][j] - static_cast<__int128>(f) * a[i][rank] % q);
                for (size_t i = 0; i < n; ++i)
                    V[j][i] = red(V[j][i] - static_cast<__int128>(f) * V[rank][i] % q);
            }
            diag.push_back(piv);
        }

        // remaining rows must be zero
        for (size_t i = rank; i < m; ++i)
            if (red(b[i]) != 0) return false;

        std::vector<long long> y(n, 0);
        for (size_t i = 0; i < rank; ++i) {
            long long d = red(diag[i]);
            long long g = std::gcd(d, q);
            if (b[i] % g != 0) return false;
            long long qq = q / g;
            y[i] = red(static_cast<__int128>(b[i] / g) * mod_pow_inv(red(d / g) % qq, qq) % qq);
        }
        x.assign(n, 0);
        for (size_t j = 0; j < n; ++j) {
            __int128 acc = 0;
            for (size_t i = 0; i < n; ++i) acc += static_cast<__int128>(V[i][j]) * y[i];
            x[j] = red(static_cast<long long>(acc % q));
        }
        return true;
    }
};

} // namespace

std::optional<std::vector<long long>> solve_mod_prime_power(std::vector<std::vector<long long>> a,
                                                            std::vector<long long> b, long long p,
                                                            long long q) {
    std::vector<long long> x;
    if (!ModSolver::solve(std::move(a), std::move(b), p, q, x)) return std::nullopt;
    return x;
}

std::optional<Cochain> solve_coboundary(const Cochain& beta, const Subgroup& h) {
    if (beta.arity() != 2) throw ContractError("coboundary solving expects a 2-cochain");
    const auto& g = h.parent();

    long long lcm = 1;
    for (Elem a : h.elements())
        for (Elem b : h.elements()) lcm = std::lcm(lcm, beta(a, b).den());
    long long modulus = lcm * h.size();

    // unknowns: exponent numerators (denominator `modulus`) of theta on the
    // non-identity elements of H
    std::vector<Elem> unknowns;
    std::vector<int> slot(g->order(), -1);
    for (Elem a : h.elements())
        if (a != g->identity()) {
            slot[a] = static_cast<int>(unknowns.size());
            unknowns.push_back(a);
        }
    size_t n = unknowns.size();

    std::vector<std::vector<long long>> A;
    std::vector<long long> rhs;
    for (Elem a : h.elements()) {
        if (a == g->identity()) continue;
        for (Elem b : h.elements()) {
            if (b == g->identity()) continue;
            std::vector<long long> row(n, 0);
            row[slot[b]] += 1;
            Elem ab = g->mul(a, b);
            if (slot[ab] >= 0) row[slot[ab]] -= 1;
            row[slot[a]] += 1;
            UnitScalar v = beta(a, b);
            A.push_back(std::move(row));
            rhs.push_back(v.num() * (modulus / v.den()));
        }
    }

    // factor modulus, solve per prime power, CRT-combine
    std::vector<std::pair<long long, long long>> factors; // (p, p^e)
    long long rem = modulus;
    for (long long p = 2; p * p <= rem; ++p) {
        if (rem % p) continue;
        long long q = 1;
        while (rem % p == 0) {
            rem /= p;
            q *= p;
        }
        factors.emplace_back(p, q);
    }
    if (rem > 1) factors.emplace_back(rem, rem);

    std::vector<long long> result(n, 0);
    long long combined = 1;
    for (auto [p, q] : factors) {
        std::vector<long long> x;
        if (!ModSolver::solve(A, rhs, p, q, x)) return std::nullopt;
        // CRT: result ≡ result (mod combined), ≡ x (mod q)
        long long cinv = mod_pow_inv(combined % q, q);
        for (size_t i = 0; i < n; ++i) {
            long long diff = ((x[i] - result[i]) % q + q) % q;
            long long t = static_cast<long long>(static_cast<__int128>(diff) * cinv % q);
            result[i] = result[i] + combined * t;
        }
        combined *= q;
    }

    Cochain::Table table;
    for (size_t i = 0; i < n; ++i) {
        std::array<Elem, 1> key{unknowns[i]};
        UnitScalar v = UnitScalar::from_exponent(result[i], modulus);
        if (!v.is_one()) table.emplace(Cochain::pack_key(key), v);
    }
    Cochain theta = Cochain::from_table(g, 1, std::move(table));

    // independent verification of the witness
    Cochain d = theta.boundary();
    for (Elem a : h.elements())
        for (Elem b : h.elements())
            if (!(d(a, b) == beta(a, b))) return std::nullopt;
    return theta;
}

} // namespace gti
