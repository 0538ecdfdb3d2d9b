#include "ualg/congruence.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace ualg {

namespace {

// Plain union-find with path halving; canonicalized on extraction.
class UnionFind {
public:
    explicit UnionFind(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

    int find(int x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    // Returns true if the two classes were distinct.
    bool unite(int x, int y) {
        x = find(x);
        y = find(y);
        if (x == y) return false;
        if (x < y) std::swap(x, y);
        parent_[x] = y;  // keep the smaller element as root
        return true;
    }

    std::vector<int> canonical_map() {
        std::vector<int> rep(parent_.size());
        for (std::size_t i = 0; i < parent_.size(); ++i) rep[i] = find(static_cast<int>(i));
        return rep;
    }

private:
    std::vector<int> parent_;
};

}  // namespace

Congruence Congruence::equality(int n) {
    std::vector<int> rep(n);
    std::iota(rep.begin(), rep.end(), 0);
    return Congruence(std::move(rep));
}

Congruence Congruence::full(int n) {
    return Congruence(std::vector<int>(n, 0));
}

Congruence Congruence::from_map(std::vector<int> rep) {
    // Canonicalize: representative is the least element of each class.
    const int n = static_cast<int>(rep.size());
    std::vector<int> least(n, -1);
    for (int i = 0; i < n; ++i) {
        int r = rep[i];
        if (r < 0 || r >= n) throw BadPartition("representative out of range");
        if (least[r] < 0) least[r] = i;
    }
    std::vector<int> canon(n);
    for (int i = 0; i < n; ++i) canon[i] = least[rep[i]];
    return Congruence(std::move(canon));
}

Congruence Congruence::from_blocks(int n, const std::vector<std::vector<int>>& blocks) {
    std::vector<int> rep(n, -1);
    for (const auto& block : blocks) {
        if (block.empty()) throw BadPartition("empty block");
        int least = *std::min_element(block.begin(), block.end());
        for (int e : block) {
            if (e < 0 || e >= n) throw BadPartition("element out of range");
            if (rep[e] != -1) throw BadPartition("element listed twice");
            rep[e] = least;
        }
    }
    for (int i = 0; i < n; ++i)
        if (rep[i] == -1) throw BadPartition("element missing from partition");
    return Congruence(std::move(rep));
}

std::vector<std::vector<int>> Congruence::blocks() const {
    std::map<int, std::vector<int>> by_rep;
    for (int i = 0; i < size(); ++i) by_rep[rep_[i]].push_back(i);
    std::vector<std::vector<int>> out;
    out.reserve(by_rep.size());
    for (auto& [r, block] : by_rep) out.push_back(std::move(block));
    return out;
}

int Congruence::block_count() const {
    std::set<int> reps(rep_.begin(), rep_.end());
    return static_cast<int>(reps.size());
}

std::vector<std::pair<int, int>> Congruence::pairs() const {
    std::vector<std::pair<int, int>> out;
    for (int x = 0; x < size(); ++x)
        for (int y = x + 1; y < size(); ++y)
            if (rep_[x] == rep_[y]) out.emplace_back(x, y);
    return out;
}

bool Congruence::is_equality() const {
    for (int i = 0; i < size(); ++i)
        if (rep_[i] != i) return false;
    return true;
}

bool Congruence::is_full() const {
    for (int r : rep_)
        if (r != 0) return false;
    return size() > 0;
}

bool Congruence::leq(const Congruence& other) const {
    for (int x = 0; x < size(); ++x)
        if (other.rep_[x] != other.rep_[rep_[x]]) return false;
    return true;
}

Congruence Congruence::meet(const Congruence& other) const {
    const int n = size();
    std::map<std::pair<int, int>, int> key_to_least;
    std::vector<int> rep(n);
    for (int x = 0; x < n; ++x) {
        auto key = std::make_pair(rep_[x], other.rep_[x]);
        auto [it, fresh] = key_to_least.try_emplace(key, x);
        rep[x] = it->second;
    }
    return Congruence(std::move(rep));
}

std::optional<CompatibilityViolation> check_congruence(const FiniteAlgebra& a,
                                                       const Congruence& pi) {
    if (pi.size() != a.size()) throw BadPartition("partition size does not match algebra");
    const int n = a.size();
    for (std::size_t oi = 0; oi < a.operations().size(); ++oi) {
        const Operation& f = a.operations()[oi];
        if (f.arity == 0) continue;
        // It suffices to vary one argument within its block at a time.
        std::int64_t total = 1;
        for (int i = 0; i < f.arity; ++i) total *= n;
        std::vector<int> args(f.arity);
        for (std::int64_t idx = 0; idx < total; ++idx) {
            std::int64_t rest = idx;
            for (int j = f.arity - 1; j >= 0; --j) {
                args[j] = static_cast<int>(rest % n);
                rest /= n;
            }
            int out = f.table[static_cast<std::size_t>(idx)];
            for (int j = 0; j < f.arity; ++j) {
                int orig = args[j];
                for (int alt = 0; alt < n; ++alt) {
                    if (alt == orig || !pi.related(alt, orig)) continue;
                    args[j] = alt;
                    int out2 = a.apply(static_cast<int>(oi), args);
                    if (!pi.related(out, out2)) {
                        std::vector<int> left(args);
                        left[j] = orig;
                        return CompatibilityViolation{f.symbol, left, args, out, out2};
                    }
                }
                args[j] = orig;
            }
        }
    }
    return std::nullopt;
}

Congruence cg(const FiniteAlgebra& a, const std::vector<std::pair<int, int>>& pairs) {
    const int n = a.size();
    UnionFind uf(n);
    std::vector<std::pair<int, int>> work;
    for (auto [x, y] : pairs) {
        if (x < 0 || x >= n || y < 0 || y >= n) throw Error("pair out of universe range");
        if (uf.unite(x, y)) work.emplace_back(x, y);
    }
    // Closure under the unary polynomials obtained by fixing all but one
    // argument of each basic operation; iterated merges make this complete.
    while (!work.empty()) {
        auto [x, y] = work.back();
        work.pop_back();
        for (std::size_t oi = 0; oi < a.operations().size(); ++oi) {
            const Operation& f = a.operations()[oi];
            if (f.arity == 0) continue;
            std::int64_t others = 1;
            for (int i = 0; i < f.arity - 1; ++i) others *= n;
            std::vector<int> args(f.arity);
            for (int pos = 0; pos < f.arity; ++pos) {
                for (std::int64_t rest_idx = 0; rest_idx < others; ++rest_idx) {
                    std::int64_t rest = rest_idx;
                    for (int j = f.arity - 1; j >= 0; --j) {
                        if (j == pos) continue;
                        args[j] = static_cast<int>(rest % n);
                        rest /= n;
                    }
                    args[pos] = x;
                    int tx = a.apply(static_cast<int>(oi), args);
                    args[pos] = y;
                    int ty = a.apply(static_cast<int>(oi), args);
                    if (uf.unite(tx, ty)) work.emplace_back(tx, ty);
                }
            }
        }
    }
    return Congruence::from_map(uf.canonical_map());
}

Congruence con_join(const FiniteAlgebra& a, const Congruence& x, const Congruence& y) {
    auto pairs = x.pairs();
    auto more = y.pairs();
    pairs.insert(pairs.end(), more.begin(), more.end());
    return cg(a, pairs);
}

std::vector<Congruence> con_lattice(const FiniteAlgebra& a, int max_size) {
    if (a.size() > max_size)
        throw SizeBoundExceeded("congruence lattice enumeration bound exceeded");
    std::set<Congruence> found;
    found.insert(Congruence::equality(a.size()));
    for (int x = 0; x < a.size(); ++x)
        for (int y = x + 1; y < a.size(); ++y) found.insert(cg(a, {{x, y}}));
    // Close under join; meets of congruences are automatically congruences.
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<Congruence> snapshot(found.begin(), found.end());
        for (std::size_t i = 0; i < snapshot.size(); ++i)
            for (std::size_t j = i + 1; j < snapshot.size(); ++j) {
                Congruence join = con_join(a, snapshot[i], snapshot[j]);
                if (found.insert(join).second) changed = true;
            }
    }
    return {found.begin(), found.end()};
}

}  // namespace ualg
