#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <unordered_set>
#include <vector>

#include "classpec/gf.hpp"
#include "classpec/groups.hpp"
#include "classpec/nat.hpp"

namespace classpec {

// Square matrix over GF(q), row-major.
struct Mat {
    unsigned n = 0;
    std::vector<Elem> a;

    Mat() = default;
    explicit Mat(unsigned dim) : n(dim), a(std::size_t(dim) * dim, 0) {}
    static Mat identity(unsigned dim);

    Elem& at(unsigned i, unsigned j) { return a[std::size_t(i) * n + j]; }
    Elem at(unsigned i, unsigned j) const { return a[std::size_t(i) * n + j]; }

    friend bool operator==(const Mat&, const Mat&) = default;
};

struct MatHash {
    std::size_t operator()(const Mat& m) const noexcept;
};

using MatSet = std::unordered_set<Mat, MatHash>;

class MatOps {
  public:
    explicit MatOps(FieldCtx k) : k_(std::move(k)) {}
    const FieldCtx& field() const { return k_; }

    Mat mul(const Mat& x, const Mat& y) const;
    Mat add(const Mat& x, const Mat& y) const;
    Mat scale(const Mat& x, Elem c) const;
    Mat transpose(const Mat& x) const;
    Mat pow(const Mat& x, const Nat& e) const;
    Mat inv(const Mat& x) const;  // InvalidArgument when singular
    Elem det(const Mat& x) const;
    unsigned rank(const Mat& x) const;
    bool is_identity(const Mat& x) const;
    bool is_scalar(const Mat& x, Elem c) const;
    std::vector<Elem> apply(const Mat& x, const std::vector<Elem>& v) const;
    // block diagonal
    Mat direct_sum(const Mat& x, const Mat& y) const;

  private:
    FieldCtx k_;
};

// companion matrix of a monic polynomial (last column carries -c_i)
Mat companion(const FieldCtx& k, const Poly& monic);

enum class FormKind { symplectic, quadratic };

// Coordinates are numbered 1..n, -1..-n (symplectic, even orthogonal) or
// 0, 1..n, -1..-n (odd orthogonal); matrix index of i is i-1 / i, of -i is n+i-1 / n+i.
struct FormData {
    FormKind kind = FormKind::symplectic;
    Eps eps = Eps::none;
    unsigned dim = 0;
    Mat gram;  // polar form B(x,y) = x^T gram y
    Mat quad;  // upper triangular, Q(x) = x^T quad x (quadratic only)
};

Elem quad_value(const FieldCtx& k, const FormData& f, const std::vector<Elem>& x);
Elem bilinear(const FieldCtx& k, const FormData& f, const std::vector<Elem>& x, const std::vector<Elem>& y);
// builds gram = quad + quad^T
FormData quadratic_form(const FieldCtx& k, Mat quad, Eps eps);

FormData symplectic_form(const FieldCtx& k, unsigned n);
FormData odd_orthogonal_form(const FieldCtx& k, unsigned n);
// eps = minus uses x_n^2 + a x_n x_-n + b x_-n^2 with t^2+at+b the smallest irreducible
FormData even_orthogonal_form(const FieldCtx& k, unsigned n, Eps eps);

enum class LieType { B, C, D };

struct RootSpec {
    enum class Kind { diff, sum, neg_sum, long_pos, long_neg, short_pos, short_neg };
    Kind kind = Kind::diff;
    unsigned i = 1;
    unsigned j = 2;  // unused for long/short roots

    static RootSpec e_minus(unsigned i, unsigned j) { return {Kind::diff, i, j}; }
    static RootSpec e_plus(unsigned i, unsigned j) { return {Kind::sum, i, j}; }
    static RootSpec neg_e_plus(unsigned i, unsigned j) { return {Kind::neg_sum, i, j}; }
    static RootSpec two_e(unsigned i) { return {Kind::long_pos, i, 0}; }
    static RootSpec neg_two_e(unsigned i) { return {Kind::long_neg, i, 0}; }
    static RootSpec e(unsigned i) { return {Kind::short_pos, i, 0}; }
    static RootSpec neg_e(unsigned i) { return {Kind::short_neg, i, 0}; }
};

// u_r(t) for the standard form of the given type and rank; InvalidRoot on bad labels
Mat root_element(const FieldCtx& k, LieType type, unsigned rank, const RootSpec& r, Elem t);
std::vector<RootSpec> simple_roots(LieType type, unsigned rank);
RootSpec negate(const RootSpec& r);

// x -> x + B(x,u)v - B(x,v)u - Q(v)B(x,u)u, u singular, B(u,v) = 0
Mat eichler(const FieldCtx& k, const FormData& f, const std::vector<Elem>& u, const std::vector<Elem>& v);
// x -> x - B(x,v)/Q(v) v
Mat reflection(const FieldCtx& k, const FormData& f, const std::vector<Elem>& v);

struct GroupGens {
    FormData form;
    std::vector<Mat> gens;
    bool projective = false;
    std::vector<Elem> central;  // scalars c with cI in the group
    Nat order;                  // order of the matrix group generated
    Factorization exponent_bound;
};

// generators of the literal group named by spec.original, over GF(q)
GroupGens standard_generators(const NormalizedSpec& spec);

bool preserves_form(const MatOps& ops, const Mat& m, const FormData& f);

// least t with M^t = I; NotPeriodic if M^bound != I
Nat element_order(const MatOps& ops, const Mat& m, const Factorization& bound);
Nat element_order(const MatOps& ops, const Mat& m, const Nat& bound);
// least t with M^t a scalar from `central`
Nat projective_order(const MatOps& ops, const Mat& m, const Factorization& bound, const std::vector<Elem>& central);
Nat group_element_order(const MatOps& ops, const GroupGens& g, const Mat& m);

// multiple of every element order in GL_d(q), cut down by the group order
Factorization exponent_bound(const GroupSpec& s, unsigned dim);

// BFS closure, deterministic order; CapExceeded beyond cap elements
std::vector<Mat> enumerate_group(const MatOps& ops, const std::vector<Mat>& gens, std::size_t cap);
// normal closure of the commutators of gens
std::vector<Mat> derived_subgroup(const MatOps& ops, const std::vector<Mat>& gens, std::size_t cap);

struct SampleOptions {
    unsigned slots = 10;
    unsigned burn_in = 200;
    unsigned streams = 4;
    unsigned threads = 0;  // 0: CLASSPEC_THREADS or hardware concurrency
};

std::vector<Mat> sample_elements(const MatOps& ops, const std::vector<Mat>& gens, std::size_t count,
                                 std::uint64_t seed, const SampleOptions& opt = {});
// (projective) orders of many elements, computed in parallel, in input order
std::vector<Nat> element_orders(const MatOps& ops, const GroupGens& g, const std::vector<Mat>& elems,
                                unsigned threads = 0);
std::vector<Nat> sample_orders(const NormalizedSpec& spec, std::size_t count, std::uint64_t seed,
                               const SampleOptions& opt = {});

// 0 iff M lies in Omega (given det 1 for odd q): spinor norm class (odd q)
// or Dickson invariant rank(M+I) mod 2 (even q). NotOrthogonal if M moves the form.
int membership_invariant(const MatOps& ops, const Mat& m, const FormData& f);

unsigned thread_count(unsigned requested);

}  // namespace classpec
