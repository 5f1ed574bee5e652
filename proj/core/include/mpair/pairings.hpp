#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "mpair/abc.hpp"
#include "mpair/partition.hpp"
#include "mpair/rational.hpp"
#include "mpair/specialize.hpp"
#include "mpair/symfn.hpp"

namespace mpair {

// Moduli space family: N_g (fixed determinant, dimension 6g-6) or M_g
// (varying determinant, dimension 8g-6).
enum class Space { N, M };

// Genus guards for the heavy computations; overridable (the CLI reads
// MPAIR_NG_MAX / MPAIR_MG_MAX).  Past these, degree-3g-3 partition
// counts make the m-basis work minutes-to-hours scale.
struct ResourceLimits {
    int ng_max = 8;
    int mg_max = 6;
};
ResourceLimits resource_limits();
void set_resource_limits(const ResourceLimits& limits);

enum class CNKind {
    XiRestriction,     // CN(Z_g | N_k): xi-class pairings
    ZRestriction,      // CN(Z_g | M_k): z-class pairings
    DeltaRestriction,  // CN(f_!V_g | N_k): delta-class pairings
    DRestriction,      // CN(f_!V_g | M_k): d-class pairings
    Tangent,           // CN(T N_g): tangent Chern numbers
};

std::string cn_kind_name(CNKind kind);

// A Chern number polynomial: the m-basis coefficient of m_lambda is the
// pairing of the lambda-indexed class monomial against the fundamental
// class.  Homogeneous of degree 3k-3 (N spaces), 4k-3 (M spaces), or
// 3g-3 (tangent).
struct CNPolynomial {
    CNKind kind;
    int g = 0;  // ambient genus
    int k = 0;  // restricted genus (== g for Tangent)
    SymFn data{Basis::M};

    int expected_degree() const;
};

// CN(Z_g|N_k) = 1/2^(k-1) [T^(k-1)] U^k R^(g-k) / Q
const CNPolynomial& cn_xi(int g, int k);
// CN(Z_g|M_k) = (-1)^k/2^(2k-1) [T^(k-1)] P^k R^(g-k) / Q
const CNPolynomial& cn_z(int g, int k);
// delta-class pairings, assembled from cn_xi through the twist
const CNPolynomial& cn_delta(int g, int k);
// d-class pairings on M, assembled from cn_z through the twist
const CNPolynomial& cn_d(int g, int k);
// CN(T N_g) = (-2)^(3g-3) [T^(g-1)] U^g / (Q E)
const CNPolynomial& cn_tangent(int g);

const CNPolynomial& cn_by_kind(CNKind kind, int g, int k);

// Chern class transform under tensoring a rank-r bundle by a line
// bundle with first Chern class t:
//   c_i -> sum_j C(r-j, i-j) t^(i-j) c_j.
// Expects c[0] = 1 (the unit of the ring).  Applying the transform at t
// and then at -t composes to the identity.
template <typename Ring>
std::vector<Ring> twist_transform(const std::vector<Ring>& c, int rank, const Ring& t) {
    std::vector<Ring> tpow;  // tpow[d] = t^(d+1)
    for (size_t d = 0; d + 1 < c.size(); ++d)
        tpow.push_back(d == 0 ? t : tpow[d - 1] * t);
    std::vector<Ring> out;
    out.reserve(c.size());
    for (size_t i = 0; i < c.size(); ++i) {
        Ring acc = c[i];  // j = i term: C(r-i, 0) t^0 c_i
        for (size_t j = 0; j < i; ++j) {
            Rational bin(binomial(rank - static_cast<long>(j), static_cast<long>(i - j)));
            if (bin == 0) continue;
            acc = acc + c[j] * tpow[i - j - 1] * bin;
        }
        out.push_back(acc);
    }
    return out;
}

// Free commutative polynomial in one indexed family of classes (xi_i on
// N, z_i on M); a key partition lists the indices of the factors.  The
// expansion currency of the pairing engine.
class ClassPoly {
  public:
    ClassPoly() = default;
    static ClassPoly constant(const Rational& c);
    static ClassPoly generator(int index) { return term(Partition::single(index), 1); }
    static ClassPoly term(const Partition& key, const Rational& c);

    const std::map<Partition, Rational, CanonicalLess>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    ClassPoly operator+(const ClassPoly& o) const;
    ClassPoly operator*(const ClassPoly& o) const;
    ClassPoly operator*(const Rational& c) const;
    ClassPoly pow(unsigned n) const;
    bool operator==(const ClassPoly& o) const { return terms_ == o.terms_; }

  private:
    std::map<Partition, Rational, CanonicalLess> terms_;
};

// delta_i (d_i on M) expanded in the twisted classes: zero for
// i > 2g-1, else sum_j C(2g-1-j, i-j) (-1)^(i-j) xi_1^(i-j) xi_j.
ClassPoly delta_as_classes(int g, int i);

// General pairing of alpha^a * prod delta_i * prod xi_i * (psi-pair
// block of size psi_pairs) against [N_k] (space N), or the analogous
// a_1/d/z monomial against [M_k] (space M, psi_pairs must be 0).
// Ambient genus g fixes the twist; the monomial is paired on the
// restricted space.
Rational mixed_pairing(Space space, int g, int k, int alpha_power,
                       const std::vector<int>& delta_indices,
                       const std::vector<int>& xi_indices, int psi_pairs = 0);

// alpha^alpha_power * delta_(lambda_1) ... delta_(lambda_n) [N_k];
// requires 2(|lambda| + alpha_power) = 6k - 6.  Always an integer.
Rational delta_pairing(int g, int k, const Partition& lambda, int alpha_power);

// a_1^power * d_(lambda_1) ... d_(lambda_n) [M_k]; degree 8k - 6.
Rational d_pairing(int g, int k, const Partition& lambda, int a1_power);

// Thaddeus pairing alpha^i beta^j [N_g] for i + 2j = 3g-3, through the
// Bernoulli numbers; zero when i < g-1 (the 1/(negative)! convention).
Rational pairing_ab(int g, int i, int j);

// alpha^i beta^j gamma^k [N_g] = 2^k k! C(g,k) alpha^i beta^j [N_(g-k)]
// for i + 2j + 3k = 3g-3.
Rational pairing_newstead(int g, int i, int j, int k);

// Evaluate a homogeneous AbcPoly of top degree 6g-6 against [N_g].
Rational abc_pairing(int g, const AbcPoly& value);

enum class GeneratorClass { Xi, Delta, TangentChern };

// The degree-2i class as an exact polynomial in alpha, beta, gamma.
// Intermediates live in the ring localized at beta; the negative powers
// must cancel (ResidualBetaDenominator signals a fault, never expected).
const AbcPoly& class_in_abc(int g, int i, GeneratorClass which);

// Chern class polynomial of TN_g up to degree cap, via class_in_abc.
std::vector<AbcPoly> tangent_classes_abc(int g, int imax);

// Closed-form series route for pairings of z-monomials with j pairs
// b_1^i b_1^(i+g), evaluated exactly as stated, with both degree
// conventions reported.  The closed form is internally inconsistent (it
// does not reduce to the plain z-pairing formula at j = 0, and its own
// degree constraint disagrees with the dimension count), so callers
// must opt in explicitly; the report carries the independent routes.
struct B1PairingReport {
    int g = 0, k = 0, j = 0;
    Partition lambda;
    bool printed_degree_ok = false;    // |lambda| == 4k - 3 + j
    bool dimension_degree_ok = false;  // 2|lambda| + 2j == 8k - 6
    std::optional<Rational> as_printed;
    std::optional<Rational> via_cn_z;          // j = 0 route
    std::optional<Rational> mrec_reference;    // j = 1: genus-drop route, sign up to +-
    std::string note;
};

B1PairingReport b1_pairing(int g, int k, int j, const Partition& lambda, bool as_printed);

// K subset of {1..2g}: true when K != K+g (mod 2g), which forces
// alpha^i beta^j prod_{l in K} psi_l [N_g] = 0.
bool psi_pairing_vanishes(int g, const std::set<int>& K);

// Vanishing criterion for b-classes: with I_i = J_i cap (J_i + g),
// J1 \ I1 != (J2 \ I2) + g forces
// x prod_{j in J1} b_1^j prod_{j in J2} b_2^j [M_g] = 0 for invariant x.
bool b_pairing_vanishes(int g, const std::set<int>& J1, const std::set<int>& J2);

// Checks sum_(i+j=3g-3) xi_i xi_j [N_g] x^i y^j
//          = g (-1)^(g-1) / 2^(g-1) * (x y^2 + x^2 y)^(g-1)
// by ev2-specializing cn_xi(g, g).
struct XiPairWitness {
    bool ok = false;
    SpecValue lhs, rhs;
};

XiPairWitness xipair_identity(int g);

}  // namespace mpair
