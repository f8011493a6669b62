#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "matinv/exprlang.hpp"
#include "matinv/genmat.hpp"
#include "matinv/schur.hpp"
#include "matinv/series.hpp"
#include "matinv/tableaux.hpp"

namespace matinv {

inline constexpr std::uint64_t kDefaultPrime1 = 2305843009213693951ULL;  // 2^61 - 1
inline constexpr std::uint64_t kDefaultPrime2 = 2305843009213693921ULL;
inline constexpr std::uint64_t kDefaultSeed = 20240417ULL;

enum class Mode { Modular, Symbolic };

std::string to_string(Mode m);

struct PipelineConfig {
    Mode mode = Mode::Modular;
    std::uint64_t prime1 = kDefaultPrime1;
    std::uint64_t prime2 = kDefaultPrime2;
    std::uint64_t seed = kDefaultSeed;

    // Throws std::invalid_argument for equal or non-prime moduli.
    void validate() const;
};

// ------------------------------------------------------------------ series

enum class SeriesId { C42, C0, KM, UnSum };

std::string to_string(SeriesId id);

struct SeriesReport {
    SeriesId id = SeriesId::C0;
    BiSeries series{0, QPoly()};
    // components[n] is the Schur decomposition of the degree-n component.
    std::vector<SchurDecomp> components;
};

// Numerator P and denominator factors of Q with h = P / Q the Hilbert series
// of C0 (two traceless 4x4 matrices).
QPoly c0_numerator();
std::vector<SeriesFactor> c0_denominator();

// Throws std::invalid_argument for D outside 0..20.
SeriesReport hilbert_c0(int D);
// C0 times 1/((1-t)(1-u)).
SeriesReport hilbert_c42(int D);
// Symmetric algebra on sum of W(shape): product over weight monomials
// t^j u^(d-j) of 1/(1 - t^j u^(d-j)) with multiplicity dim W(shape)_(j,d-j).
SeriesReport hilbert_km(const std::vector<Partition>& generators, int D);
// 1 + sum of the Hilbert series of U_n for n = 1..D.
SeriesReport hilbert_un_sum(int D);

// ------------------------------------------------------------------ generators

// A generator of W(shape) with the weight basis obtained by lowering:
// weight_basis[k] has bidegree (l1 - k, l2 + k), k = 0..l1 - l2.
struct GeneratorModule {
    Partition shape;
    TracePoly generator;
    std::vector<TracePoly> weight_basis;
};

struct GeneratorSet {
    std::vector<GeneratorModule> entries;

    // Throws std::invalid_argument if the generator has the wrong bidegree,
    // is not killed by delta, or lowers to zero too early.
    static GeneratorModule make_module(Partition shape, TracePoly generator);
    void add(Partition shape, TracePoly generator);
    std::vector<Partition> shapes() const;
    // Modules of degree < n.
    GeneratorSet below(int n) const;
};

// tr([x,y]^l2 x^(l1-l2)), or the special degree-10 element for (5,5).
TracePoly theorem_generator(Partition shape);
// The thirteen modules, W(1,0) first.
std::vector<Partition> theorem_modules();

// ------------------------------------------------------------------ pipeline

struct DegreeResult {
    int n = 0;
    // Per bidegree (p, n - p), p = n..0: dimension of the part generated by
    // lower degrees, and of the whole component.
    std::vector<std::pair<Bidegree, std::size_t>> old_dims;
    std::vector<std::pair<Bidegree, std::size_t>> full_dims;
    ModuleDecomp old_modules;
    ModuleDecomp new_modules;
    // Chosen highest weight vectors for new_modules, as catalogue indices.
    std::vector<std::pair<Partition, std::size_t>> chosen;
};

struct RelationReport {
    Partition shape;
    std::size_t q = 0;                  // multiplicity of W(shape) in U_n
    std::size_t p = 0;                  // multiplicity in the old part
    std::size_t old_candidates = 0;     // products of weight vectors at the shape
    std::size_t nullspace_dim = 0;      // of (old products | w_1..w_q)
    std::size_t w_rank = 0;             // rank of the nullspace on w coordinates
    std::size_t new_multiplicity = 0;   // q - w_rank
    bool consistent_with_decomp = false;

    // Same computation with the corpus products v_j in place of the old span.
    bool has_corpus = false;
    std::vector<std::string> columns;   // w1..wq, v1..vp
    std::vector<std::vector<Rat>> corpus_nullspace;  // reduced, one row per vector
    std::size_t corpus_w_rank = 0;
    std::vector<std::string> matched_ids;
    std::vector<std::string> unmatched_ids;
    bool corpus_vs_in_old_span = false;
};

struct RecordCheck {
    std::string id;
    Partition shape;
    bool pass = false;
    std::size_t points_checked = 0;
    std::string witness;  // first nonzero point or monomial when failing
};

struct TheoremSummary {
    std::vector<DegreeResult> degrees;               // n = 2..10
    std::vector<Partition> modules;                  // W(1,0) plus the computed G_n
    bool modules_match = false;
    std::vector<std::pair<Partition, bool>> generators_new;  // claimed generator outside the old span
    bool series_match = false;                       // H(K[M]) = H(C0) through degree 10
    std::vector<int> series_mismatch_degrees;
    bool dims_consistent = false;                    // full dims equal the C0 series
    // Degrees re-run in symbolic mode (modular runs only).
    int certified_through = 0;
    bool certified_match = true;
    bool pass = false;
};

struct RemarkReport {
    bool trace_commutator5_zero = false;
    std::size_t trace_commutator5_points = 0;
    std::optional<bool> trace_commutator5_symbolic;
    // Schur decomposition of H(K[M]) - H(C0) in degrees 11..Dmax.
    std::vector<std::pair<int, SchurDecomp>> differences;
    std::vector<std::pair<int, bool>> difference_matches;
    std::uint64_t jacobian_seed = 0;
    std::size_t jacobian_rank = 0;
    std::vector<std::string> jacobian_columns;  // 17 independent variables
    bool pass = false;
};

// Inductive pipeline over degrees 2..10 with cached intermediate results.
class Pipeline {
public:
    explicit Pipeline(PipelineConfig cfg = {});

    const PipelineConfig& config() const { return cfg_; }

    // Generator modules of all degrees < n, computed inductively.
    const GeneratorSet& generators_below(int n);
    const DegreeResult& degree(int n);
    RelationReport discover(Partition shape, const Corpus* corpus = nullptr);

private:
    PipelineConfig cfg_;
    std::map<int, DegreeResult> degrees_;
    std::map<int, GeneratorSet> below_;
};

// Dimension of the bidegree-b part of the subalgebra generated by gens.
// Throws ModularDisagreement when the two primes disagree.
std::size_t subalgebra_dim(const GeneratorSet& gens, Bidegree b, const PipelineConfig& cfg);

// Character of (whole component) minus (part generated by `lower`) in
// degree n, Schur-decomposed.
ModuleDecomp new_generator_decomp(const GeneratorSet& lower, int n, const PipelineConfig& cfg);
DegreeResult compute_degree(const GeneratorSet& lower, int n, const PipelineConfig& cfg);

RelationReport discover_relations(Partition shape, const PipelineConfig& cfg, const Corpus* corpus = nullptr);

// Modular mode uses `points` points per prime.
RecordCheck verify_record(const Corpus& corpus, const RelationRecord& r, const PipelineConfig& cfg,
                          std::size_t points = 40);
std::vector<RecordCheck> verify_corpus(const Corpus& corpus, const PipelineConfig& cfg, std::size_t points = 40);

// certify_through: degrees re-checked in symbolic mode when cfg is modular.
TheoremSummary verify_theorem(const PipelineConfig& cfg, int certify_through = 8);

RemarkReport remark_checks(int Dmax, const PipelineConfig& cfg);

}  // namespace matinv
