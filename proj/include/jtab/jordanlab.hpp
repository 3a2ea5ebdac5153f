#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "jtab/gfp.hpp"
#include "jtab/partition.hpp"
#include "jtab/table.hpp"

namespace jtab {

/* J_P: block-diagonal nilpotent Jordan matrix, blocks in descending size.
 * Basis per block is ordered so the cyclic vector sits in the last column
 * (classical superdiagonal form).  Requires Fp::modulus() > |P|.
 */
MatFp jordan_matrix(const Partition& p);

/* Jordan type from coranks of powers; throws unless the input is nilpotent */
Partition jordan_type(const MatFp& a);

/* rank sequence r_k = sum_{p_i >= k} (p_i - k), k = 1..n-1 */
std::vector<long long> rank_sequence(const Partition& p);

/* The affine coordinates of U_B for B = J_base.  A matrix commuting with B
 * is fixed by the images of the cyclic vectors (1,i,k); the component into
 * V_{j,l} lives in the subspace killed by B^i (min(i,j) coefficients), and
 * same-length components drop the cyclic coefficient unless the copy index
 * strictly increases.  For two-part bases the coordinates are exactly
 * a_1..a_{u-1}, b_1..b_{u-r-1}, g_1..g_{u-r}, g'_1..g'_{u-r}.
 */
struct UBRow {
    int len = 0;
    int copy = 0;
    int offset = 0;
};

struct UBCoord {
    int src = 0;     // row index
    int dst = 0;     // row index
    int ustart = 0;  // coefficient of (ustart, len(dst), copy(dst)) in A(1, len(src), copy(src))
};

class UBStructure {
public:
    explicit UBStructure(const Partition& base);

    const Partition& base() const { return base_; }
    int n() const { return n_; }
    int dim() const { return static_cast<int>(coords_.size()); }
    const std::vector<UBRow>& rows() const { return rows_; }
    const std::vector<UBCoord>& coords() const { return coords_; }

    /* sl2 weight of the coordinate: 2 ustart - len(dst) + len(src) - 2;
     * for two-part bases this is Eq.-(4.19): w(a_k)=w(b_k)=2k,
     * w(g_j)=w(g'_j)=r+2(j-1)
     */
    int coord_weight(int c) const;
    std::string coord_label(int c) const;

    bool two_part() const;
    int index_a(int m) const;
    int index_b(int m) const;
    int index_g(int j) const;
    int index_gp(int j) const;

    MatFp realize(const std::vector<Fp>& values) const;

private:
    Partition base_;
    int n_ = 0;
    std::vector<UBRow> rows_;
    std::vector<UBCoord> coords_;
    std::map<std::tuple<int, int, int>, int> lookup_;
    int find(int src, int dst, int ustart) const;
};

struct UBSample {
    UBStructure structure;
    std::vector<Fp> values;
    MatFp matrix;
};

/* uniform over the free coordinates; requires Fp::modulus() > |base| */
UBSample sample_UB(const Partition& base, uint64_t seed, uint64_t trial = 0);

struct McImage {
    Partition type;
    bool dominance_ok = true;  // every sampled type lies below the returned one
    std::map<Partition, int> histogram;
};

/* Bruhat-maximum Jordan type over `trials` samples of U_{J_P} */
McImage mc_image(const Partition& p, int trials, uint64_t seed);

struct ScalingReport {
    int passes = 0;
    int trials = 0;
};

/* Jordan type is invariant under the weighted coordinate scaling
 * x -> lambda^{w(x)} x (Prop. 4.10's sl2-homogeneity, in sampled form)
 */
ScalingReport scaling_invariance_check(const Partition& base, int trials, uint64_t seed);

/* Conjectured generators of I(Z(P_{k,l})) for Q = (u,u-r): the linear set
 * E(mu,nu) = {a_1..a_mu, b_1..b_nu} plus quadrics X_1..X_s(k1,k2) with
 * X_s = sum_v det [[a_{k1+v}, g_v], [g'_{s+1-v}, b_{k2+s+1-v}]].
 */
struct LocusSpec {
    Partition q;
    int k = 0, l = 0;
    CellClass cls = CellClass::A;
    int t = 0;
    int mu = 0, nu = 0;
    int s = 0, k1 = 0, k2 = 0;
    bool beyond_conjecture = false;  // l = u-r column, outside Conjecture 4.17's range
    std::vector<std::string> generator_names() const;
};

LocusSpec locus_spec(const Partition& q, int k, int l);

struct SampleConstraints {
    std::vector<int> zero_coords;
    int s = 0, k1 = 0, k2 = 0;       // solve X_1..X_s(k1,k2) = 0 when s > 0
    std::vector<int> nonzero_coords; // resample until all are nonzero
};

struct LocusReport {
    std::map<Partition, int> histogram;
    Partition modal;
    int modal_count = 0;
    int trials = 0;
    int failed_trials = 0;  // pivot/nonzero constraints unsatisfiable within retries
    bool matches_table = false;
};

/* Samples points satisfying the linear equations exactly and the quadrics by
 * pivoting (b_{k2+j} when a_{k1+1} != 0, else g'_j when g_1 != 0; 32 retries).
 */
LocusReport sample_jordan_types(const UBStructure& ub, const SampleConstraints& cons, int trials,
                                uint64_t seed);

LocusReport locus_sample_check(const LocusSpec& spec, int trials, uint64_t seed);

} // namespace jtab
