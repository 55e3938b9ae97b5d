#include "gti/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>

namespace gti {

namespace {

void check_group_axioms(int n, const std::vector<Elem>& mul, const std::vector<Elem>& inv) {
    auto at = [&](Elem a, Elem b) { return mul[static_cast<size_t>(a) * n + b]; };
    for (Elem a = 0; a < n; ++a) {
        if (at(0, a) != a || at(a, 0) != a)
            throw ValidationError("identity is not a two-sided unit");
        if (at(a, inv[a]) != 0 || at(inv[a], a) != 0)
            throw ValidationError("inverse table is inconsistent");
    }
    if (n <= 64) {
        for (Elem a = 0; a < n; ++a)
            for (Elem b = 0; b < n; ++b)
                for (Elem c = 0; c < n; ++c)
                    if (at(at(a, b), c) != at(a, at(b, c)))
                        throw ValidationError("multiplication table is not associative");
    }
}

} // namespace

GroupPtr FiniteGroup::from_mul_table(std::vector<std::vector<Elem>> mul) {
    int n = static_cast<int>(mul.size());
    if (n == 0) throw ValidationError("empty multiplication table");
    std::vector<Elem> flat(static_cast<size_t>(n) * n);
    for (int a = 0; a < n; ++a) {
        if (static_cast<int>(mul[a].size()) != n)
            throw ValidationError("multiplication table is not square");
        for (int b = 0; b < n; ++b) {
            Elem v = mul[a][b];
            if (v < 0 || v >= n) throw ValidationError("multiplication table entry out of range");
            flat[static_cast<size_t>(a) * n + b] = v;
        }
    }
    std::vector<Elem> inv(n, -1);
    for (Elem a = 0; a < n; ++a) {
        for (Elem b = 0; b < n; ++b)
            if (flat[static_cast<size_t>(a) * n + b] == 0) {
                inv[a] = b;
                break;
            }
        if (inv[a] < 0) throw ValidationError("element without inverse");
    }
    check_group_axioms(n, flat, inv);
    return GroupPtr(new FiniteGroup(n, std::move(flat), std::move(inv)));
}

GroupPtr FiniteGroup::trivial() { return cyclic(1); }

GroupPtr FiniteGroup::cyclic(int n) {
    if (n < 1) throw ValidationError("cyclic group order must be positive");
    std::vector<std::vector<Elem>> mul(n, std::vector<Elem>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) mul[a][b] = (a + b) % n;
    return from_mul_table(std::move(mul));
}

Elem FiniteGroup::power(Elem a, long long m) const {
    Elem base = m >= 0 ? a : inv(a);
    long long k = m >= 0 ? m : -m;
    Elem acc = identity();
    for (long long i = 0; i < k; ++i) acc = mul(acc, base);
    return acc;
}

int FiniteGroup::element_order(Elem a) const {
    Elem x = a;
    int k = 1;
    while (x != identity()) {
        x = mul(x, a);
        ++k;
    }
    return k;
}

bool FiniteGroup::is_cyclic_canonical() const {
    for (Elem a = 0; a < order_; ++a)
        for (Elem b = 0; b < order_; ++b)
            if (mul(a, b) != (a + b) % order_) return false;
    return true;
}

GroupPtr group_from_permutations(int degree, const std::vector<std::vector<int>>& generators,
                                 int order_cap, std::vector<std::vector<int>>* element_perms) {
    if (degree < 1) throw ValidationError("degree must be positive");
    for (const auto& g : generators) {
        if (static_cast<int>(g.size()) != degree)
            throw ValidationError("generator has wrong degree");
        std::vector<char> seen(degree, 0);
        for (int v : g) {
            if (v < 0 || v >= degree || seen[v]) throw ValidationError("generator is not a bijection");
            seen[v] = 1;
        }
    }
    std::vector<int> id(degree);
    std::iota(id.begin(), id.end(), 0);

    auto compose = [degree](const std::vector<int>& a, const std::vector<int>& b) {
        // (a*b)(i) = a(b(i))
        std::vector<int> r(degree);
        for (int i = 0; i < degree; ++i) r[i] = a[b[i]];
        return r;
    };

    // Breadth-first closure starting at the identity gives the canonical
    // element numbering.
    std::vector<std::vector<int>> elems{id};
    std::map<std::vector<int>, Elem> index{{id, 0}};
    std::queue<Elem> todo;
    todo.push(0);
    while (!todo.empty()) {
        Elem cur = todo.front();
        todo.pop();
        for (const auto& g : generators) {
            auto p = compose(elems[cur], g);
            auto [it, inserted] = index.emplace(std::move(p), static_cast<Elem>(elems.size()));
            if (inserted) {
                if (static_cast<int>(elems.size()) >= order_cap)
                    throw SizeLimitError("permutation closure exceeds order cap");
                elems.push_back(it->first);
                todo.push(it->second);
            }
        }
    }

    int n = static_cast<int>(elems.size());
    std::vector<std::vector<Elem>> mul(n, std::vector<Elem>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            auto it = index.find(compose(elems[a], elems[b]));
            if (it == index.end()) throw ValidationError("closure is not closed");
            mul[a][b] = it->second;
        }
    if (element_perms) *element_perms = elems;
    return FiniteGroup::from_mul_table(std::move(mul));
}

Subgroup::Subgroup(GroupPtr parent, std::vector<Elem> elements)
    : parent_(std::move(parent)), elements_(std::move(elements)) {
    std::sort(elements_.begin(), elements_.end());
    elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
    mask_.assign(parent_->order(), 0);
    for (Elem x : elements_) {
        if (x < 0 || x >= parent_->order()) throw ValidationError("subgroup element out of range");
        mask_[x] = 1;
    }
    if (elements_.empty() || !mask_[parent_->identity()])
        throw ValidationError("subgroup must contain the identity");
    for (Elem a : elements_) {
        if (!mask_[parent_->inv(a)]) throw ValidationError("subgroup not closed under inverse");
        for (Elem b : elements_)
            if (!mask_[parent_->mul(a, b)]) throw ValidationError("subgroup not closed under multiplication");
    }
}

Subgroup Subgroup::full(GroupPtr g) {
    std::vector<Elem> all(g->order());
    std::iota(all.begin(), all.end(), 0);
    return Subgroup(std::move(g), std::move(all));
}

Subgroup Subgroup::trivial(GroupPtr g) { return Subgroup(std::move(g), {0}); }

int Subgroup::local_index(Elem x) const {
    auto it = std::lower_bound(elements_.begin(), elements_.end(), x);
    if (it == elements_.end() || *it != x) throw ContractError("element not in subgroup");
    return static_cast<int>(it - elements_.begin());
}

GroupHom::GroupHom(GroupPtr src, GroupPtr tgt, std::vector<Elem> imgs)
    : source(std::move(src)), target(std::move(tgt)), images(std::move(imgs)) {
    if (static_cast<int>(images.size()) != source->order())
        throw ValidationError("homomorphism image table has wrong size");
    for (Elem v : images)
        if (v < 0 || v >= target->order()) throw ValidationError("homomorphism image out of range");
    if (images[source->identity()] != target->identity())
        throw ValidationError("homomorphism does not preserve the identity");
    for (Elem a = 0; a < source->order(); ++a)
        for (Elem b = 0; b < source->order(); ++b)
            if (images[source->mul(a, b)] != target->mul(images[a], images[b]))
                throw ValidationError("image table is not multiplicative");
}

DirectProduct direct_product(GroupPtr a, GroupPtr b, int order_cap) {
    long long n = static_cast<long long>(a->order()) * b->order();
    if (n > order_cap) throw SizeLimitError("direct product exceeds order cap");
    int na = a->order(), nb = b->order();
    std::vector<std::vector<Elem>> mul(n, std::vector<Elem>(n));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            int ax = x / nb, bx = x % nb, ay = y / nb, by = y % nb;
            mul[x][y] = a->mul(ax, ay) * nb + b->mul(bx, by);
        }
    DirectProduct prod;
    prod.group = FiniteGroup::from_mul_table(std::move(mul));
    prod.left = std::move(a);
    prod.right = std::move(b);

    std::vector<Elem> pl(n), pr(n);
    for (int x = 0; x < n; ++x) {
        pl[x] = x / nb;
        pr[x] = x % nb;
    }
    prod.proj_left = GroupHom(prod.group, prod.left, std::move(pl));
    prod.proj_right = GroupHom(prod.group, prod.right, std::move(pr));

    std::vector<Elem> il(na), ir(nb);
    for (int x = 0; x < na; ++x) il[x] = x * nb;
    for (int x = 0; x < nb; ++x) ir[x] = x;
    prod.inj_left = GroupHom(prod.left, prod.group, std::move(il));
    prod.inj_right = GroupHom(prod.right, prod.group, std::move(ir));
    return prod;
}

Subgroup diagonal_subgroup(const DirectProduct& prod) {
    if (prod.left->order() != prod.right->order())
        throw ContractError("diagonal subgroup requires equal factors");
    std::vector<Elem> elems;
    elems.reserve(prod.left->order());
    for (Elem x = 0; x < prod.left->order(); ++x) elems.push_back(prod.pair(x, x));
    return Subgroup(prod.group, std::move(elems));
}

Subgroup subgroup_closure(const GroupPtr& g, const std::vector<Elem>& gens) {
    std::vector<char> mask(g->order(), 0);
    std::vector<Elem> elems{g->identity()};
    mask[g->identity()] = 1;
    std::queue<Elem> todo;
    todo.push(g->identity());
    for (Elem x : gens) {
        if (x < 0 || x >= g->order()) throw ContractError("generator out of range");
        if (!mask[x]) {
            mask[x] = 1;
            elems.push_back(x);
            todo.push(x);
        }
    }
    while (!todo.empty()) {
        Elem cur = todo.front();
        todo.pop();
        for (Elem x : gens) {
            for (Elem p : {g->mul(cur, x), g->mul(x, cur), g->inv(cur)}) {
                if (!mask[p]) {
                    mask[p] = 1;
                    elems.push_back(p);
                    todo.push(p);
                }
            }
        }
    }
    return Subgroup(g, std::move(elems));
}

CosetDecomposition right_cosets(const GroupPtr& g, const Subgroup& h) {
    CosetDecomposition dec;
    dec.rep_of.assign(g->order(), -1);
    for (Elem x = 0; x < g->order(); ++x) {
        if (dec.rep_of[x] >= 0) continue;
        // x is minimal in its class xH by scan order
        dec.representatives.push_back(x);
        for (Elem k : h.elements()) dec.rep_of[g->mul(x, k)] = x;
    }
    return dec;
}

DoubleCosetDecomposition double_cosets(const GroupPtr& g, const Subgroup& h) {
    DoubleCosetDecomposition dec;
    dec.rep_of.assign(g->order(), -1);
    for (Elem x = 0; x < g->order(); ++x) {
        if (dec.rep_of[x] >= 0) continue;
        dec.representatives.push_back(x);
        for (Elem a : h.elements())
            for (Elem b : h.elements()) dec.rep_of[g->mul(g->mul(a, x), b)] = x;
    }
    return dec;
}

Subgroup stabilizer_of_coset(const GroupPtr& g, const Subgroup& h, Elem coset_rep) {
    auto cosets = right_cosets(g, h);
    Elem target = cosets.rep_of[coset_rep];
    std::vector<Elem> elems;
    for (Elem k : h.elements())
        if (cosets.rep_of[g->mul(k, coset_rep)] == target) elems.push_back(k);
    return Subgroup(g, std::move(elems));
}

std::vector<Elem> coset_elements(const GroupPtr& g, const Subgroup& h, Elem coset_rep) {
    std::vector<Elem> out;
    out.reserve(h.size());
    for (Elem k : h.elements()) out.push_back(g->mul(coset_rep, k));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<OrbitInfo> adjoint_orbit_representatives(const Subgroup& s, const std::vector<Elem>& coset) {
    const auto& g = s.parent();
    std::vector<char> in_coset(g->order(), 0), done(g->order(), 0);
    for (Elem x : coset) in_coset[x] = 1;
    std::vector<OrbitInfo> out;
    for (Elem r : coset) {
        if (done[r]) continue;
        int orbit = 0, stab = 0;
        for (Elem x : s.elements()) {
            Elem y = g->conj(x, r);
            if (!in_coset[y]) throw ContractError("subgroup does not stabilize the coset setwise");
            if (y == r) ++stab;
            if (!done[y]) {
                done[y] = 1;
                ++orbit;
            }
        }
        out.push_back({r, orbit, stab});
    }
    return out;
}

ClassDecomposition conjugacy_classes(const GroupPtr& g) {
    ClassDecomposition dec;
    dec.rep_of.assign(g->order(), -1);
    for (Elem x = 0; x < g->order(); ++x) {
        if (dec.rep_of[x] >= 0) continue;
        dec.representatives.push_back(x);
        for (Elem a = 0; a < g->order(); ++a) dec.rep_of[g->conj(a, x)] = x;
    }
    return dec;
}

Subgroup centralizer(const GroupPtr& g, Elem x) {
    std::vector<Elem> elems;
    for (Elem a = 0; a < g->order(); ++a)
        if (g->mul(a, x) == g->mul(x, a)) elems.push_back(a);
    return Subgroup(g, std::move(elems));
}

} // namespace gti
