#pragma once

#include "parahoric/gauge.hpp"
#include "parahoric/lie.hpp"
#include "parahoric/parahoric.hpp"

#include <optional>
#include <string>
#include <vector>

namespace parahoric {

struct Reduced {
    Connection B;
    GaugeWord w;
};

struct Budget {
    // Zero means the built-in defaults.
    std::int64_t max_iterations = 0;
    std::int64_t max_ramification = 0;
    // Bound on |xi| in cocharacter searches.
    std::int64_t search_box = 3;
    bool boalch = false;
};

// Reduction steps act on the depth slices of a connection. depth t holds the
// monomials E_ab z^k with theta_a - theta_b + k == t.

struct CommuteResult {
    Connection B;
    GaugeWord w;
    QMat S;
};
CommuteResult reduce_semisimple_commute(const Weight &w, const Connection &a);

Reduced reduce_multi_semisimple(const Weight &w, const Connection &a, const std::vector<QMat> &s_list);
Reduced reduce_to_cartan(const Weight &w, const Connection &a, const std::vector<QMat> &s_list);

struct NilpotentResult {
    Connection B;
    GaugeWord w;
    Sl2Triple triple;
    // Depth of the leading datum.
    Rat lead_depth;
};
NilpotentResult reduce_nilpotent_center(const Weight &w, const Connection &a, bool align_h = true);

struct SplittingInvariants {
    Rat Lambda;
    std::optional<Rat> Upsilon; // nullopt is infinity
};
SplittingInvariants splitting_invariants(const Weight &w, const Connection &b, const Sl2Triple &t);
// Restricted to an ambient subalgebra holding the triple.
SplittingInvariants splitting_invariants(const Weight &w, const Connection &b, const Sl2Triple &t,
                                         const Subalgebra &ambient);

Reduced shear(const Connection &b, const Sl2Triple &t, std::int64_t cover, std::int64_t n);

enum class FormClass { logarithmic, cartan_irregular, boalch, failed };
const char *form_class_name(FormClass f);

struct ProgressEntry {
    std::string step;
    Rat slope;
    std::size_t derived_dim;
    std::int64_t order;
    std::int64_t b;
};

struct ReductionReport {
    FormClass form_class = FormClass::failed;
    Connection final;
    std::int64_t ramification = 1;
    GaugeWord certificate;
    Rat slope;
    std::int64_t effective_trunc = kInf;
    std::vector<ProgressEntry> progress_log;
};

ReductionReport full_reduce(const Weight &w, const Connection &a, const Budget &budget = {});
Rat slope(const Connection &a, const Budget &budget = {});

struct RegularityVerdict {
    bool regular = false;
    std::optional<Weight> witness_weight;
    std::optional<GaugeWord> witness_gauge;
};
RegularityVerdict is_regular(const Connection &a, const Budget &budget = {});
// Replays the witness and checks that z times the result lies in the
// parahoric algebra of the witness weight.
bool verify_regularity_witness(const Connection &a, const RegularityVerdict &v);

struct BoalchResult {
    Connection B;
    GaugeWord w;
    QMat R;
};
BoalchResult boalch_normalize(const Weight &w, const Connection &a);
bool is_boalch_type(const Weight &w, const Connection &a, const QMat &R);

Reduced deligne_twist(const Connection &a, const QMat &R);

struct RelativeRegularity {
    bool verdict = false;
    Weight weight;
    MatSeries template_q;
    GaugeWord certificate;
    std::optional<Connection> reduced;
};
RelativeRegularity relative_regularity_check(const Connection &a, const Budget &budget = {});

// Shape test: order c_target, nilpotent leading coefficient, every other
// coefficient upper triangular.
bool borel_shape(const Connection &b, std::int64_t c_target);
Reduced borel_reduce(const Weight &w, const Connection &a, const Budget &budget = {});

struct BirkhoffFactors {
    GaugeWord g1;
    std::vector<std::int64_t> xi;
    GaugeWord g2;
};
BirkhoffFactors birkhoff_factor(const MatSeries &g, const Weight &w);
// g1 * z^xi * g2 as a matrix series.
MatSeries birkhoff_product(const BirkhoffFactors &f, std::size_t n, std::int64_t cap);

bool nilpotency_transport_check(const Weight &w, const Connection &a, const MatSeries &g);

std::int64_t springer_tangent_dim(const Weight &w, const Connection &a, const GaugeWord &g,
                                  std::int64_t window);
std::int64_t springer_bound(const Weight &w, const Connection &a, const GaugeWord &g);

// Order of a connection in its own variable: minus the least exponent.
std::int64_t plain_order(const Connection &a);

} // namespace parahoric
