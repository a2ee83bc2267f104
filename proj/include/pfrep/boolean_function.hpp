// Truth-table representation of Boolean functions plus the named families
// used throughout the library (AND, OR, XOR, Maj, CQ, C3, Mod^k, Exact^k).
//
// Index convention: the table bit at index m is f(x) where the i-th input bit
// x_i (1-based) is bit i-1 of m, so x_1 is the least significant index bit.
// The +/-1 view maps bit b to 1 - 2b, i.e. input bit 1 corresponds to -1.

#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace pfrep {

constexpr int max_vars = 20;  // exhaustive 2^n loops stay small

inline std::size_t checked_table_size(int n) {
    if (n < 0 || n > max_vars) throw std::invalid_argument("variable count out of range [0, 20]");
    return std::size_t{1} << n;
}

class boolean_function {
public:
    boolean_function(int n, std::vector<std::uint8_t> table) : n_(n), table_(std::move(table)) {
        if (table_.size() != checked_table_size(n)) {
            throw std::invalid_argument("truth table length must be 2^n");
        }
        for (auto& b : table_) b = b ? 1 : 0;
    }

    int var_count() const { return n_; }
    std::size_t table_size() const { return table_.size(); }
    const std::vector<std::uint8_t>& table() const { return table_; }

    std::uint8_t value(std::uint32_t index) const { return table_[index]; }
    int sign_value(std::uint32_t index) const { return 1 - 2 * static_cast<int>(table_[index]); }

    std::uint8_t evaluate(const std::vector<std::uint8_t>& bits) const {
        if (static_cast<int>(bits.size()) != n_) throw std::invalid_argument("evaluate: arity mismatch");
        std::uint32_t m = 0;
        for (int i = 0; i < n_; ++i) m |= static_cast<std::uint32_t>(bits[i] ? 1 : 0) << i;
        return table_[m];
    }

    bool is_constant() const {
        for (auto b : table_)
            if (b != table_[0]) return false;
        return true;
    }

    friend bool operator==(const boolean_function&, const boolean_function&) = default;

private:
    int n_;
    std::vector<std::uint8_t> table_;
};

inline boolean_function from_truth_table(int n, std::vector<std::uint8_t> bits) {
    return boolean_function(n, std::move(bits));
}

// A symmetric function is determined by the set of input weights it accepts.
struct symmetric_profile {
    int n = 0;
    std::set<int> accept;

    boolean_function to_function() const {
        std::size_t size = checked_table_size(n);
        std::vector<std::uint8_t> t(size);
        for (std::uint32_t m = 0; m < size; ++m) t[m] = accept.count(std::popcount(m)) ? 1 : 0;
        return boolean_function(n, std::move(t));
    }
};

inline boolean_function from_accept_weights(int n, std::set<int> accept) {
    for (int w : accept)
        if (w < 0 || w > n) throw std::invalid_argument("accepted weight out of range [0, n]");
    return symmetric_profile{n, std::move(accept)}.to_function();
}

inline std::optional<symmetric_profile> is_symmetric(const boolean_function& f) {
    symmetric_profile p;
    p.n = f.var_count();
    std::vector<int> seen(p.n + 1, -1);
    for (std::uint32_t m = 0; m < f.table_size(); ++m) {
        int w = std::popcount(m);
        int v = f.value(m);
        if (seen[w] == -1) {
            seen[w] = v;
        } else if (seen[w] != v) {
            return std::nullopt;
        }
    }
    for (int w = 0; w <= p.n; ++w)
        if (seen[w] == 1) p.accept.insert(w);
    return p;
}

// --- named families (weight-based definitions) ---

inline boolean_function make_and(int n) {
    if (n < 1) throw std::invalid_argument("and: n >= 1 required");
    return from_accept_weights(n, {n});
}

inline boolean_function make_or(int n) {
    if (n < 1) throw std::invalid_argument("or: n >= 1 required");
    std::set<int> acc;
    for (int w = 1; w <= n; ++w) acc.insert(w);
    return from_accept_weights(n, std::move(acc));
}

inline boolean_function make_xor(int n) {
    if (n < 1) throw std::invalid_argument("xor: n >= 1 required");
    std::set<int> acc;
    for (int w = 1; w <= n; w += 2) acc.insert(w);
    return from_accept_weights(n, std::move(acc));
}

inline boolean_function make_maj(int n) {
    if (n < 1 || n % 2 == 0) throw std::invalid_argument("maj: odd n >= 1 required");
    std::set<int> acc;
    for (int w = n / 2 + 1; w <= n; ++w) acc.insert(w);
    return from_accept_weights(n, std::move(acc));
}

// Complete quadratic: XOR of all pairs, equivalently the second LSB of the weight.
inline boolean_function make_cq(int n) {
    if (n < 1) throw std::invalid_argument("cq: n >= 1 required");
    std::set<int> acc;
    for (int w = 0; w <= n; ++w)
        if ((w >> 1) & 1) acc.insert(w);
    return from_accept_weights(n, std::move(acc));
}

// Complete cubic: XOR of all triples, equivalently weight = 3 (mod 4).
inline boolean_function make_c3(int n) {
    if (n < 1) throw std::invalid_argument("c3: n >= 1 required");
    std::set<int> acc;
    for (int w = 0; w <= n; ++w)
        if (w % 4 == 3) acc.insert(w);
    return from_accept_weights(n, std::move(acc));
}

inline boolean_function make_mod(int k, int n) {
    if (n < 1) throw std::invalid_argument("mod: n >= 1 required");
    if (k < 2) throw std::invalid_argument("mod: k >= 2 required");
    std::set<int> acc;
    for (int w = 0; w <= n; ++w)
        if (w % k == 0) acc.insert(w);
    return from_accept_weights(n, std::move(acc));
}

inline boolean_function make_exact(int k, int n) {
    if (n < 1) throw std::invalid_argument("exact: n >= 1 required");
    if (k < 0 || k > n) throw std::invalid_argument("exact: 0 <= k <= n required");
    return from_accept_weights(n, {k});
}

// Dispatch by family name; k is ignored by the one-parameter families.
inline boolean_function make_family(const std::string& name, int n, int k = 0) {
    if (name == "and") return make_and(n);
    if (name == "or") return make_or(n);
    if (name == "xor") return make_xor(n);
    if (name == "maj") return make_maj(n);
    if (name == "cq") return make_cq(n);
    if (name == "c3") return make_c3(n);
    if (name == "mod") return make_mod(k, n);
    if (name == "exact") return make_exact(k, n);
    throw std::invalid_argument("unknown family: " + name);
}

// Linear sketch composition: result(x) = g(parity over S_1, ..., parity over S_k).
inline boolean_function compose_parities(const boolean_function& g, int n,
                                         const std::vector<std::uint32_t>& sets) {
    if (sets.size() != static_cast<std::size_t>(g.var_count())) {
        throw std::invalid_argument("compose_parities: one set per input of g required");
    }
    std::size_t size = checked_table_size(n);
    for (auto s : sets)
        if (s >= size) throw std::invalid_argument("compose_parities: set not contained in [n]");
    std::vector<std::uint8_t> t(size);
    for (std::uint32_t m = 0; m < size; ++m) {
        std::uint32_t inner = 0;
        for (std::size_t j = 0; j < sets.size(); ++j) {
            inner |= static_cast<std::uint32_t>(std::popcount(m & sets[j]) & 1) << j;
        }
        t[m] = g.value(inner);
    }
    return boolean_function(n, std::move(t));
}

}  // namespace pfrep
