#include "tfx/graph.hpp"

#include <algorithm>
#include <bit>

namespace tfx {

Graph::Graph(int n) : n_(n), words_(VertexSet::words_for(n)) {
    if (n < 0) throw DomainError("Graph: negative order");
    if (n > kMaxVertices) throw DomainError("Graph: order exceeds the 2^16 vertex limit");
    bits_.assign(static_cast<std::size_t>(n_) * words_, 0);
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

long long Graph::edge_count() const {
    long long twice = 0;
    for (uint64_t w : bits_) twice += std::popcount(w);
    return twice / 2;
}

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw DomainError("Graph: loops are not allowed");
    bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] |= uint64_t{1} << (v & 63);
    bits_[static_cast<std::size_t>(v) * words_ + (u >> 6)] |= uint64_t{1} << (u & 63);
}

void Graph::remove_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] &= ~(uint64_t{1} << (v & 63));
    bits_[static_cast<std::size_t>(v) * words_ + (u >> 6)] &= ~(uint64_t{1} << (u & 63));
}

int Graph::degree(int v) const {
    check_vertex(v);
    const uint64_t* r = row(v);
    int d = 0;
    for (int i = 0; i < words_; ++i) d += std::popcount(r[i]);
    return d;
}

std::vector<int> Graph::degrees() const {
    std::vector<int> d(static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v) d[static_cast<std::size_t>(v)] = degree(v);
    return d;
}

int Graph::min_degree() const {
    int best = 0;
    for (int v = 0; v < n_; ++v) {
        int d = degree(v);
        if (v == 0 || d < best) best = d;
    }
    return best;
}

int Graph::deg_into(int v, const VertexSet& within) const {
    check_vertex(v);
    if (within.universe() != n_) throw DomainError("deg_into: set universe mismatch");
    const uint64_t* r = row(v);
    int d = 0;
    for (int i = 0; i < words_; ++i) d += std::popcount(r[i] & within.word(static_cast<std::size_t>(i)));
    return d;
}

VertexSet Graph::neighbors(int v) const {
    check_vertex(v);
    VertexSet s(n_);
    const uint64_t* r = row(v);
    for (int u = 0; u < n_; ++u)
        if ((r[u >> 6] >> (u & 63)) & 1u) s.set(u);
    return s;
}

Graph Graph::induced_subgraph(const VertexSet& keep) const {
    if (keep.universe() != n_) throw DomainError("induced_subgraph: set universe mismatch");
    std::vector<int> verts = keep.to_vector();
    Graph h(static_cast<int>(verts.size()));
    for (std::size_t a = 0; a < verts.size(); ++a)
        for (std::size_t b = a + 1; b < verts.size(); ++b)
            if (adjacent(verts[a], verts[b])) h.add_edge(static_cast<int>(a), static_cast<int>(b));
    return h;
}

Graph Graph::relabeled(const std::vector<int>& new_index) const {
    if (static_cast<int>(new_index.size()) != n_)
        throw DomainError("relabeled: permutation size mismatch");
    std::vector<char> seen(static_cast<std::size_t>(n_), 0);
    for (int v = 0; v < n_; ++v) {
        int t = new_index[static_cast<std::size_t>(v)];
        if (t < 0 || t >= n_ || seen[static_cast<std::size_t>(t)])
            throw DomainError("relabeled: not a permutation");
        seen[static_cast<std::size_t>(t)] = 1;
    }
    Graph h(n_);
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (adjacent(u, v))
                h.add_edge(new_index[static_cast<std::size_t>(u)], new_index[static_cast<std::size_t>(v)]);
    return h;
}

// ---------------------------------------------------------------------------
// graph6

namespace {

constexpr std::string_view kHeader = ">>graph6<<";

int decode_n(std::string_view s, std::size_t& pos) {
    if (pos >= s.size()) throw ParseError("graph6: empty encoding", pos);
    unsigned char c0 = static_cast<unsigned char>(s[pos]);
    if (c0 < 63 || c0 > 126) throw ParseError("graph6: invalid length byte", pos);
    if (c0 != 126) {
        ++pos;
        return c0 - 63;
    }
    // 126 escape: next three bytes hold an 18-bit order (126 126 would start
    // the 8-byte form for n > 258047, beyond this library's vertex limit).
    if (pos + 1 < s.size() && static_cast<unsigned char>(s[pos + 1]) == 126)
        throw ParseError("graph6: order beyond supported range", pos + 1);
    if (pos + 3 >= s.size()) throw ParseError("graph6: truncated length field", s.size());
    int n = 0;
    for (std::size_t k = 1; k <= 3; ++k) {
        unsigned char c = static_cast<unsigned char>(s[pos + k]);
        if (c < 63 || c > 126) throw ParseError("graph6: invalid length byte", pos + k);
        n = (n << 6) | (c - 63);
    }
    pos += 4;
    return n;
}

} // namespace

Graph from_graph6(std::string_view line) {
    std::string_view s = line;
    // Tolerate a textual header and trailing line terminators.
    if (s.substr(0, kHeader.size()) == kHeader) s.remove_prefix(kHeader.size());
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.remove_suffix(1);

    std::size_t pos = 0;
    int n = decode_n(s, pos);
    if (n > Graph::kMaxVertices)
        throw ParseError("graph6: order exceeds the 2^16 vertex limit", 0);

    long long nbits = static_cast<long long>(n) * (n - 1) / 2;
    std::size_t nbytes = static_cast<std::size_t>((nbits + 5) / 6);
    if (s.size() - pos < nbytes) throw ParseError("graph6: truncated edge data", s.size());
    if (s.size() - pos > nbytes) throw ParseError("graph6: trailing garbage", pos + nbytes);

    Graph g(n);
    long long bit = 0;
    int i = 0, j = 1; // upper-triangle column-major cursor
    for (std::size_t k = 0; k < nbytes; ++k) {
        unsigned char c = static_cast<unsigned char>(s[pos + k]);
        if (c < 63 || c > 126) throw ParseError("graph6: invalid data byte", pos + k);
        int val = c - 63;
        for (int b = 5; b >= 0; --b, ++bit) {
            int on = (val >> b) & 1;
            if (bit >= nbits) {
                if (on) throw ParseError("graph6: nonzero padding bits", pos + k);
                continue;
            }
            if (on) g.add_edge(i, j);
            if (++i == j) {
                i = 0;
                ++j;
            }
        }
    }
    return g;
}

std::string to_graph6(const Graph& g) {
    int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(63 + n));
    } else {
        out.push_back(static_cast<char>(126));
        out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
        out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
        out.push_back(static_cast<char>(63 + (n & 63)));
    }
    int val = 0, nb = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            val = (val << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++nb == 6) {
                out.push_back(static_cast<char>(63 + val));
                val = 0;
                nb = 0;
            }
        }
    if (nb > 0) out.push_back(static_cast<char>(63 + (val << (6 - nb))));
    return out;
}

std::vector<Graph> read_graph6_stream(std::istream& in) {
    std::vector<Graph> out;
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (first && line.rfind(kHeader, 0) == 0) line = line.substr(kHeader.size());
        first = false;
        if (line.empty()) continue;
        out.push_back(from_graph6(line));
    }
    return out;
}

// ---------------------------------------------------------------------------

Graph blow_up(const BlowupSpec& spec) {
    const Graph& base = spec.base;
    if (static_cast<int>(spec.sizes.size()) != base.order())
        throw DomainError("blow_up: one size per base vertex required");
    for (int s : spec.sizes)
        if (s < 0) throw DomainError("blow_up: negative part size");

    std::vector<int> start(spec.sizes.size() + 1, 0);
    for (std::size_t i = 0; i < spec.sizes.size(); ++i)
        start[i + 1] = start[i] + spec.sizes[i];
    Graph g(start.back());
    for (int a = 0; a < base.order(); ++a)
        for (int b = a + 1; b < base.order(); ++b) {
            if (!base.adjacent(a, b)) continue;
            for (int u = start[static_cast<std::size_t>(a)]; u < start[static_cast<std::size_t>(a) + 1]; ++u)
                for (int v = start[static_cast<std::size_t>(b)]; v < start[static_cast<std::size_t>(b) + 1]; ++v)
                    g.add_edge(u, v);
        }
    return g;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    Graph g(a.order() + b.order());
    for (int u = 0; u < a.order(); ++u)
        for (int v = u + 1; v < a.order(); ++v)
            if (a.adjacent(u, v)) g.add_edge(u, v);
    for (int u = 0; u < b.order(); ++u)
        for (int v = u + 1; v < b.order(); ++v)
            if (b.adjacent(u, v)) g.add_edge(a.order() + u, a.order() + v);
    return g;
}

} // namespace tfx
