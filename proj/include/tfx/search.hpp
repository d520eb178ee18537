#pragma once

#include <functional>
#include <string>
#include <vector>

#include "tfx/bounds.hpp"
#include "tfx/graph.hpp"

namespace tfx {

/// Conjunction of hypothesis atoms. Triangle-freeness is always part of the
/// predicate and is enforced during generation; the remaining atoms are
/// evaluated at full size only.
struct Predicate {
    bool non_bipartite = false;
    int chi_ge = 0; // 0 = unconstrained
    int d2_ge = 0;
    bool connected = false;

    /// Comma-separated atoms: "triangle-free", "non-bipartite", "chi>=K",
    /// "d2>=K", "connected".
    static Predicate parse(const std::string& text);
    std::string to_string() const;

    /// Full-size evaluation; assumes the graph is already triangle-free.
    bool eval(const Graph& g) const;
};

struct EnumStats {
    unsigned long long emitted = 0;    // classes that passed the predicate
    unsigned long long generated = 0;  // classes reaching full size
    unsigned long long nodes = 0;      // accepted classes across all levels
    unsigned long long candidates = 0; // extension candidates examined
    void add(const EnumStats& o) {
        emitted += o.emitted;
        generated += o.generated;
        nodes += o.nodes;
        candidates += o.candidates;
    }
};

struct SearchLimits {
    int enumerate_ceiling = 0; // 0 = TFX_CEILING env or the default of 11
    int max_edges_ceiling = 13;
    int jobs = 1;
};
int default_enumerate_ceiling();

/// Isomorph-free exhaustive stream: exactly one canonical representative
/// per triangle-free isomorphism class on n vertices satisfying the
/// predicate. Canonical augmentation; deterministic order. Single-threaded;
/// parallel callers run split_frontier tokens instead.
void enumerate_triangle_free(int n, const Predicate& pred,
                             const std::function<void(const Graph&, const std::string& g6)>& visit,
                             EnumStats* stats = nullptr, const SearchLimits& limits = {});

/// Continue the augmentation from a frontier token down to n vertices.
void enumerate_from_token(const std::string& token_g6, int n, const Predicate& pred,
                          const std::function<void(const Graph&, const std::string& g6)>& visit,
                          EnumStats* stats = nullptr);

/// The canonical classes `depth` augmentation steps below the one-vertex
/// root; running every token reproduces the unpartitioned stream (as a set
/// of canonical forms). Deterministic.
std::vector<std::string> split_frontier(int n, const Predicate& pred, int depth);

/// Full predicate stream as sorted canonical graph6 lines. Work runs over
/// the fixed token partition, so output and stats are identical for any
/// limits.jobs.
std::vector<std::string> enumerate_collect(int n, const Predicate& pred,
                                           EnumStats* stats = nullptr,
                                           const SearchLimits& limits = {});

struct MaxEdgesResult {
    int max_edges = -1; // -1: no graph on n vertices satisfies the predicate
    std::vector<std::string> witnesses; // canonical graph6 of every extremal class, sorted
    EnumStats stats;
};

/// Exact maximum edge count over the predicate class, with every extremal
/// class as a witness. Branch-and-bound over the augmentation tree with an
/// admissible completion bound; work is partitioned into frontier tokens
/// (fixed policy, independent of the job count) so results and node counts
/// are identical for any limits.jobs.
MaxEdgesResult max_edges(int n, const Predicate& pred, const SearchLimits& limits = {});

enum class Verdict { equality, strict, violated, not_applicable };
std::string verdict_name(Verdict v);

struct SearchReport {
    int n = 0;
    Predicate predicate;
    BoundId bound = BoundId::mantel;
    long long bound_value = 0;
    int max_edges = -1;
    std::vector<std::string> witnesses;
    Verdict verdict = Verdict::not_applicable;
    bool capacity_hit = false;
    bool witness_check_ran = false;
    bool witness_check_ok = false;
    std::string witness_check_note;
    EnumStats stats;
    double wall_ms = 0;
};

/// Run max_edges under the bound's hypothesis class for each n in
/// [from, to], compare against the bound, and check extremal witnesses
/// against the matching construction. Capacity failures are recorded
/// per n, not thrown.
std::vector<SearchReport> verify_theorem(BoundId bound, int from, int to,
                                         const SearchLimits& limits = {});

/// Process exit code for a verification run: 4 if any bound was violated,
/// else 3 if any n hit a capacity ceiling, else 0.
int verify_exit_code(const std::vector<SearchReport>& reports);

} // namespace tfx
