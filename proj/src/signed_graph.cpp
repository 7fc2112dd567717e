#include "sgh/signed_graph.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace sgh {

namespace {
std::pair<int, int> norm_pair(int a, int b) {
    if (a == b) throw std::invalid_argument("signed graph: loop edge {" + std::to_string(a) + "}");
    return {std::min(a, b), std::max(a, b)};
}
}  // namespace

Edge Edge::positive(int a, int b) {
    auto [i, j] = norm_pair(a, b);
    return {Kind::positive, i, j};
}
Edge Edge::negative(int a, int b) {
    auto [i, j] = norm_pair(a, b);
    return {Kind::negative, i, j};
}
Edge Edge::half(int v) { return {Kind::half, v, 0}; }

std::string Edge::to_string() const {
    switch (kind) {
        case Kind::positive: return "+{" + std::to_string(i) + "," + std::to_string(j) + "}";
        case Kind::negative: return "-{" + std::to_string(i) + "," + std::to_string(j) + "}";
        default: return "h{" + std::to_string(i) + "}";
    }
}

SignedGraph::SignedGraph(int n, std::set<Pair> positive, std::set<Pair> negative, std::set<int> half_edges)
    : n_(n), pos_(std::move(positive)), neg_(std::move(negative)), half_(std::move(half_edges)) {
    if (n < 1 || n > 64) throw std::invalid_argument("signed graph: vertex count must be in 1..64");
    auto check_pair = [n](const Pair& e) {
        if (e.first == e.second) throw std::invalid_argument("signed graph: loop edge");
        if (e.first < 1 || e.second < 1 || e.first > n || e.second > n || e.first > e.second)
            throw std::invalid_argument("signed graph: pair edge endpoints out of range");
    };
    for (const auto& e : pos_) check_pair(e);
    for (const auto& e : neg_) check_pair(e);
    for (int v : half_)
        if (v < 1 || v > n) throw std::invalid_argument("signed graph: half-edge vertex out of range");
}

SignedGraph SignedGraph::parse(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0, n = -1;
    std::set<Pair> pos, neg;
    std::set<int> half;
    auto fail = [&lineno](const std::string& msg) {
        throw std::invalid_argument("graph parse error at line " + std::to_string(lineno) + ": " + msg);
    };
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string word;
        if (!(ls >> word)) continue;  // blank/comment line
        if (word == "vertices") {
            if (n != -1) fail("duplicate vertices line");
            if (!(ls >> n) || n < 1) fail("expected a positive vertex count");
        } else if (word == "edge") {
            if (n == -1) fail("edge before vertices line");
            std::string sign;
            int a = 0, b = 0;
            if (!(ls >> sign >> a >> b) || (sign != "+" && sign != "-")) fail("expected 'edge +|- i j'");
            if (a < 1 || a > n || b < 1 || b > n) fail("vertex out of range");
            if (a == b) fail("loop edge");
            auto& cls = (sign == "+") ? pos : neg;
            if (!cls.insert(norm_pair(a, b)).second) fail("duplicate " + sign + " edge");
        } else if (word == "halfedge") {
            if (n == -1) fail("halfedge before vertices line");
            int v = 0;
            if (!(ls >> v)) fail("expected 'halfedge i'");
            if (v < 1 || v > n) fail("vertex out of range");
            half.insert(v);  // repeats collapse: at most one half-edge per vertex
        } else {
            fail("unknown directive '" + word + "'");
        }
        std::string extra;
        if (ls >> extra) fail("trailing tokens");
    }
    if (n == -1) {
        lineno = 0;
        fail("missing vertices line");
    }
    return SignedGraph(n, std::move(pos), std::move(neg), std::move(half));
}

bool SignedGraph::has_edge(const Edge& e) const {
    switch (e.kind) {
        case Edge::Kind::positive: return pos_.contains({e.i, e.j});
        case Edge::Kind::negative: return neg_.contains({e.i, e.j});
        default: return half_.contains(e.i);
    }
}

std::vector<Edge> SignedGraph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count());
    for (const auto& [i, j] : pos_) out.push_back(Edge::positive(i, j));
    for (const auto& [i, j] : neg_) out.push_back(Edge::negative(i, j));
    for (int v : half_) out.push_back(Edge::half(v));
    return out;
}

std::string SignedGraph::to_string() const {
    std::ostringstream out;
    out << "[n=" << n_;
    for (const auto& [i, j] : pos_) out << " +{" << i << "," << j << "}";
    for (const auto& [i, j] : neg_) out << " -{" << i << "," << j << "}";
    for (int v : half_) out << " h{" << v << "}";
    out << "]";
    return out.str();
}

SignedGraph switch_at(const SignedGraph& g, int v) {
    if (v < 1 || v > g.vertex_count()) throw std::invalid_argument("switch_at: vertex out of range");
    // incident pairs swap sign class simultaneously, so a pair carried by both
    // classes stays in both
    std::set<SignedGraph::Pair> pos, neg;
    auto incident = [v](const SignedGraph::Pair& e) { return e.first == v || e.second == v; };
    for (const auto& e : g.positive_edges()) (incident(e) ? neg : pos).insert(e);
    for (const auto& e : g.negative_edges()) (incident(e) ? pos : neg).insert(e);
    return SignedGraph(g.vertex_count(), std::move(pos), std::move(neg), g.half_edges());
}

SignedGraph delete_edge(const SignedGraph& g, const Edge& e) {
    if (!g.has_edge(e)) throw std::invalid_argument("delete_edge: " + e.to_string() + " not in graph");
    auto pos = g.positive_edges();
    auto neg = g.negative_edges();
    auto half = g.half_edges();
    switch (e.kind) {
        case Edge::Kind::positive: pos.erase({e.i, e.j}); break;
        case Edge::Kind::negative: neg.erase({e.i, e.j}); break;
        default: half.erase(e.i); break;
    }
    return SignedGraph(g.vertex_count(), std::move(pos), std::move(neg), std::move(half));
}

namespace {

// vertex map for removing `gone` after merging it into `into` (into < gone
// for pair contraction; for half-edge contraction into = 0 is unused)
int relabel_after(int v, int gone) { return v > gone ? v - 1 : v; }

SignedGraph contract_positive(const SignedGraph& g, int i, int j) {
    std::set<SignedGraph::Pair> pos, neg;
    std::set<int> half;
    auto mapv = [i, j](int v) { return relabel_after(v == j ? i : v, j); };
    for (const auto& [a, b] : g.positive_edges()) {
        if (a == i && b == j) continue;  // the contracted edge itself
        pos.insert({std::min(mapv(a), mapv(b)), std::max(mapv(a), mapv(b))});
    }
    for (const auto& [a, b] : g.negative_edges()) {
        if (a == i && b == j) {
            half.insert(relabel_after(i, j));  // parallel negative copy -> half-edge
            continue;
        }
        neg.insert({std::min(mapv(a), mapv(b)), std::max(mapv(a), mapv(b))});
    }
    for (int v : g.half_edges()) half.insert(mapv(v));
    return SignedGraph(g.vertex_count() - 1, std::move(pos), std::move(neg), std::move(half));
}

SignedGraph contract_half(const SignedGraph& g, int i) {
    std::set<SignedGraph::Pair> pos, neg;
    std::set<int> half;
    for (const auto& [a, b] : g.positive_edges()) {
        if (a == i || b == i)
            half.insert(relabel_after(a == i ? b : a, i));  // truncate to the far endpoint
        else
            pos.insert({relabel_after(a, i), relabel_after(b, i)});
    }
    for (const auto& [a, b] : g.negative_edges()) {
        if (a == i || b == i)
            half.insert(relabel_after(a == i ? b : a, i));
        else
            neg.insert({relabel_after(a, i), relabel_after(b, i)});
    }
    for (int v : g.half_edges())
        if (v != i) half.insert(relabel_after(v, i));
    return SignedGraph(g.vertex_count() - 1, std::move(pos), std::move(neg), std::move(half));
}

}  // namespace

SignedGraph contract_edge(const SignedGraph& g, const Edge& e) {
    if (!g.has_edge(e)) throw std::invalid_argument("contract_edge: " + e.to_string() + " not in graph");
    switch (e.kind) {
        case Edge::Kind::positive:
            if (g.vertex_count() == 1) throw std::logic_error("contract_edge: cannot shrink below one vertex");
            return contract_positive(g, e.i, e.j);
        case Edge::Kind::half:
            if (g.vertex_count() == 1)
                throw std::invalid_argument("contract_edge: half-edge contraction needs n >= 2");
            return contract_half(g, e.i);
        default:
            throw std::invalid_argument("contract_edge: negative pair edges must be switched positive first");
    }
}

Int count_proper_colorings(const SignedGraph& g, int c) {
    if (c < 0) throw std::invalid_argument("count_proper_colorings: c must be >= 0");
    const int n = g.vertex_count();
    std::vector<int> phi(static_cast<std::size_t>(n), -c);
    Int count = 0;
    while (true) {
        bool ok = true;
        for (const auto& [a, b] : g.positive_edges())
            if (phi[static_cast<std::size_t>(a - 1)] == phi[static_cast<std::size_t>(b - 1)]) {
                ok = false;
                break;
            }
        if (ok)
            for (const auto& [a, b] : g.negative_edges())
                if (phi[static_cast<std::size_t>(a - 1)] == -phi[static_cast<std::size_t>(b - 1)]) {
                    ok = false;
                    break;
                }
        if (ok)
            for (int v : g.half_edges())
                if (phi[static_cast<std::size_t>(v - 1)] == 0) {
                    ok = false;
                    break;
                }
        if (ok) ++count;
        // odometer over {-c..c}^n
        int pos = 0;
        while (pos < n && phi[static_cast<std::size_t>(pos)] == c) {
            phi[static_cast<std::size_t>(pos)] = -c;
            ++pos;
        }
        if (pos == n) break;
        ++phi[static_cast<std::size_t>(pos)];
    }
    return count;
}

namespace {

IntPolynomial chromatic_memo(const SignedGraph& g, std::map<std::string, IntPolynomial>& memo) {
    const std::string key = g.to_string();
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    IntPolynomial result;
    if (!g.positive_edges().empty()) {
        const auto& [i, j] = *g.positive_edges().begin();
        Edge e = Edge::positive(i, j);
        result = chromatic_memo(delete_edge(g, e), memo) - chromatic_memo(contract_edge(g, e), memo);
    } else if (!g.negative_edges().empty()) {
        // switching preserves the count; make the smallest negative pair positive
        const auto& [i, j] = *g.negative_edges().begin();
        result = chromatic_memo(switch_at(g, i), memo);
    } else {
        // only half-edges: λ^{n-h} (λ-1)^h
        const int h = static_cast<int>(g.half_edges().size());
        IntPolynomial p = IntPolynomial::monomial(g.vertex_count() - h);
        IntPolynomial lm1({-1, 1});
        for (int k = 0; k < h; ++k) p = p * lm1;
        result = p;
    }
    memo.emplace(key, result);
    return result;
}

}  // namespace

IntPolynomial chromatic_polynomial(const SignedGraph& g) {
    std::map<std::string, IntPolynomial> memo;
    return chromatic_memo(g, memo);
}

IntPolynomial chromatic_by_interpolation(const SignedGraph& g) {
    const int n = g.vertex_count();
    // Lagrange through (2c+1, count) for c = 0..n
    std::vector<Rational> acc(static_cast<std::size_t>(n) + 1, Rational(0));
    for (int i = 0; i <= n; ++i) {
        const Rational xi(2 * i + 1);
        const Rational yi(count_proper_colorings(g, i));
        std::vector<Rational> basis{1};
        Rational denom = 1;
        for (int j = 0; j <= n; ++j) {
            if (j == i) continue;
            const Rational xj(2 * j + 1);
            std::vector<Rational> next(basis.size() + 1);
            for (std::size_t k = 0; k < basis.size(); ++k) {
                next[k] -= basis[k] * xj;
                next[k + 1] += basis[k];
            }
            basis = std::move(next);
            denom *= (xi - xj);
        }
        for (std::size_t k = 0; k < basis.size(); ++k) acc[k] += yi * basis[k] / denom;
    }
    std::vector<Int> coeffs;
    coeffs.reserve(acc.size());
    for (const auto& q : acc) {
        if (!is_integer(q))
            throw std::logic_error("chromatic_by_interpolation: non-integer coefficient " + q.str());
        coeffs.push_back(numerator(q));
    }
    return IntPolynomial(std::move(coeffs));
}

std::vector<Int> chromatic_coefficients(const SignedGraph& g) {
    const int n = g.vertex_count();
    IntPolynomial chi = chromatic_polynomial(g);
    if (chi.degree() != n || chi.coeff(n) != 1)
        throw std::logic_error("chromatic_coefficients: polynomial is not monic of degree n");
    std::vector<Int> c(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
        Int v = chi.coeff(j);
        if ((n - j) % 2) v = -v;
        if (v < 0) throw std::logic_error("chromatic_coefficients: negative c_" + std::to_string(j));
        c[static_cast<std::size_t>(j)] = v;
    }
    return c;
}

}  // namespace sgh
