#include "ualg/algebra.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <unordered_set>

#include "ualg/congruence.hpp"

namespace ualg {

FiniteAlgebra::FiniteAlgebra(std::string name, int size, std::vector<Operation> ops)
    : name_(std::move(name)), size_(size), ops_(std::move(ops)) {
    if (size_ <= 0) throw Error("algebra size must be positive");
    std::unordered_set<std::string> seen;
    for (const auto& op : ops_) {
        if (op.arity < 0) throw Error("negative arity for " + op.symbol);
        if (!seen.insert(op.symbol).second)
            throw Error("duplicate operation symbol: " + op.symbol);
        std::int64_t expect = 1;
        for (int i = 0; i < op.arity; ++i) expect *= size_;
        if (static_cast<std::int64_t>(op.table.size()) != expect)
            throw Error("table length mismatch for " + op.symbol);
        for (int v : op.table)
            if (v < 0 || v >= size_) throw Error("table entry out of range for " + op.symbol);
    }
}

int FiniteAlgebra::op_index(const std::string& symbol) const {
    for (std::size_t i = 0; i < ops_.size(); ++i)
        if (ops_[i].symbol == symbol) return static_cast<int>(i);
    throw UnknownSymbol(symbol);
}

bool FiniteAlgebra::has_op(const std::string& symbol) const {
    for (const auto& op : ops_)
        if (op.symbol == symbol) return true;
    return false;
}

int FiniteAlgebra::apply(int op, std::span<const int> args) const {
    const Operation& f = ops_[op];
    if (static_cast<int>(args.size()) != f.arity)
        throw ArityMismatch("operation " + f.symbol + " expects " + std::to_string(f.arity) +
                            " arguments, got " + std::to_string(args.size()));
    std::int64_t idx = 0;
    for (int a : args) {
        if (a < 0 || a >= size_) throw Error("argument out of universe range");
        idx = idx * size_ + a;
    }
    return f.table[static_cast<std::size_t>(idx)];
}

PowerCodec::PowerCodec(int base, int width, std::int64_t max_indexable)
    : base_(base), width_(width) {
    if (base <= 0 || width < 1) throw Error("bad codec parameters");
    count_ = 1;
    for (int i = 0; i < width; ++i) {
        count_ *= base;
        if (count_ > max_indexable)
            throw SizeBoundExceeded("power universe exceeds size bound");
    }
}

std::int64_t PowerCodec::encode(std::span<const int> tuple) const {
    std::int64_t idx = 0;
    for (int v : tuple) idx = idx * base_ + v;
    return idx;
}

std::vector<int> PowerCodec::decode(std::int64_t index) const {
    std::vector<int> out(width_);
    decode_into(index, out);
    return out;
}

void PowerCodec::decode_into(std::int64_t index, std::span<int> out) const {
    for (int i = width_ - 1; i >= 0; --i) {
        out[i] = static_cast<int>(index % base_);
        index /= base_;
    }
}

std::int64_t power_size_bound() {
    if (const char* env = std::getenv("CLAB_MAX_POWER")) {
        char* end = nullptr;
        long long v = std::strtoll(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return PowerCodec::kDefaultBound;
}

PowerAlgebra power(const FiniteAlgebra& a, int k, std::int64_t size_bound) {
    if (k < 1) throw Error("power exponent must be >= 1");
    PowerCodec codec(a.size(), k, size_bound);
    const std::int64_t big_n = codec.count();

    std::vector<Operation> ops;
    ops.reserve(a.operations().size());
    for (std::size_t oi = 0; oi < a.operations().size(); ++oi) {
        const Operation& f = a.operations()[oi];
        std::int64_t cells = 1;
        for (int i = 0; i < f.arity; ++i) {
            cells *= big_n;
            if (cells > size_bound)
                throw SizeBoundExceeded("power operation table exceeds size bound");
        }
        Operation g{f.symbol, f.arity, std::vector<int>(static_cast<std::size_t>(cells))};
        std::vector<std::int64_t> arg_idx(f.arity, 0);
        std::vector<std::vector<int>> arg_tuples(f.arity, std::vector<int>(k));
        std::vector<int> coord_args(f.arity);
        std::vector<int> result(k);
        for (std::int64_t cell = 0; cell < cells; ++cell) {
            // decode cell into the argument indices (first arg most significant)
            std::int64_t rest = cell;
            for (int j = f.arity - 1; j >= 0; --j) {
                arg_idx[j] = rest % big_n;
                rest /= big_n;
            }
            for (int j = 0; j < f.arity; ++j) codec.decode_into(arg_idx[j], arg_tuples[j]);
            for (int c = 0; c < k; ++c) {
                for (int j = 0; j < f.arity; ++j) coord_args[j] = arg_tuples[j][c];
                result[c] = a.apply(static_cast<int>(oi), coord_args);
            }
            g.table[static_cast<std::size_t>(cell)] = static_cast<int>(codec.encode(result));
        }
        ops.push_back(std::move(g));
    }
    FiniteAlgebra alg(a.name() + "^" + std::to_string(k), static_cast<int>(big_n),
                      std::move(ops));
    return PowerAlgebra{std::move(alg), codec};
}

std::vector<int> subuniverse_closure(const FiniteAlgebra& a, std::vector<int> generators) {
    const int n = a.size();
    std::vector<char> in(n, 0);
    std::vector<int> members;
    for (int g : generators) {
        if (g < 0 || g >= n) throw Error("generator out of universe range");
        if (!in[g]) {
            in[g] = 1;
            members.push_back(g);
        }
    }
    // Worklist over newly added elements: every argument tuple containing at
    // least one new element gets re-evaluated.
    std::size_t frontier_start = 0;
    while (frontier_start < members.size()) {
        std::size_t frontier_end = members.size();
        for (std::size_t oi = 0; oi < a.operations().size(); ++oi) {
            const Operation& f = a.operations()[oi];
            if (f.arity == 0) {
                int v = f.table[0];
                if (!in[v]) {
                    in[v] = 1;
                    members.push_back(v);
                }
                continue;
            }
            std::vector<int> args(f.arity);
            std::vector<std::size_t> pos(f.arity, 0);
            // enumerate tuples over current members with at least one index
            // in [frontier_start, frontier_end)
            const std::size_t m = frontier_end;
            std::vector<std::size_t> counter(f.arity, 0);
            bool done = false;
            while (!done) {
                bool touches_frontier = false;
                for (int j = 0; j < f.arity; ++j)
                    if (counter[j] >= frontier_start) touches_frontier = true;
                if (touches_frontier) {
                    for (int j = 0; j < f.arity; ++j) args[j] = members[counter[j]];
                    int v = a.apply(static_cast<int>(oi), args);
                    if (!in[v]) {
                        in[v] = 1;
                        members.push_back(v);
                    }
                }
                int j = f.arity - 1;
                while (j >= 0 && ++counter[j] == m) counter[j--] = 0;
                if (j < 0) done = true;
            }
        }
        frontier_start = frontier_end;
    }
    std::sort(members.begin(), members.end());
    return members;
}

QuotientResult quotient(const FiniteAlgebra& a, const Congruence& theta) {
    auto violation = check_congruence(a, theta);
    if (violation)
        throw NotACongruence("partition is not compatible with operation " + violation->symbol);

    const auto blocks = theta.blocks();
    const int m = static_cast<int>(blocks.size());
    std::vector<int> bar(a.size());
    for (int b = 0; b < m; ++b)
        for (int e : blocks[b]) bar[e] = b;

    std::vector<Operation> ops;
    for (std::size_t oi = 0; oi < a.operations().size(); ++oi) {
        const Operation& f = a.operations()[oi];
        std::int64_t cells = 1;
        for (int i = 0; i < f.arity; ++i) cells *= m;
        Operation g{f.symbol, f.arity, std::vector<int>(static_cast<std::size_t>(cells), -1)};
        // Well-definedness is checked by scanning every element tuple and
        // demanding all representatives of a block tuple land in one block.
        std::int64_t total = 1;
        for (int i = 0; i < f.arity; ++i) total *= a.size();
        std::vector<int> args(f.arity);
        for (std::int64_t idx = 0; idx < total; ++idx) {
            std::int64_t rest = idx;
            for (int j = f.arity - 1; j >= 0; --j) {
                args[j] = static_cast<int>(rest % a.size());
                rest /= a.size();
            }
            std::int64_t cell = 0;
            for (int j = 0; j < f.arity; ++j) cell = cell * m + bar[args[j]];
            int out = bar[f.table[static_cast<std::size_t>(idx)]];
            int& slot = g.table[static_cast<std::size_t>(cell)];
            if (slot == -1)
                slot = out;
            else if (slot != out)
                throw NotACongruence("operation " + f.symbol + " not well-defined on blocks");
        }
        ops.push_back(std::move(g));
    }
    FiniteAlgebra q(a.name() + "/theta", m, std::move(ops));
    return QuotientResult{std::move(q), std::move(bar)};
}

FiniteAlgebra induced_subalgebra(const FiniteAlgebra& a, const std::vector<int>& elements) {
    const int m = static_cast<int>(elements.size());
    if (m == 0) throw Error("empty subuniverse");
    std::vector<int> index_of(a.size(), -1);
    for (int i = 0; i < m; ++i) index_of[elements[i]] = i;

    std::vector<Operation> ops;
    for (const Operation& f : a.operations()) {
        std::int64_t cells = 1;
        for (int i = 0; i < f.arity; ++i) cells *= m;
        Operation g{f.symbol, f.arity, std::vector<int>(static_cast<std::size_t>(cells))};
        std::vector<int> args(f.arity);
        for (std::int64_t cell = 0; cell < cells; ++cell) {
            std::int64_t rest = cell;
            for (int j = f.arity - 1; j >= 0; --j) {
                args[j] = elements[rest % m];
                rest /= m;
            }
            std::int64_t idx = 0;
            for (int j = 0; j < f.arity; ++j) idx = idx * a.size() + args[j];
            int v = f.table[static_cast<std::size_t>(idx)];
            if (index_of[v] < 0) throw Error("set is not closed under " + f.symbol);
            g.table[static_cast<std::size_t>(cell)] = index_of[v];
        }
        ops.push_back(std::move(g));
    }
    return FiniteAlgebra(a.name() + "|sub", m, std::move(ops));
}

}  // namespace ualg
