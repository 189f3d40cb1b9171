#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <variant>
#include <vector>

#include "qhopf/presentation.hpp"
#include "qhopf/tensor.hpp"

namespace qhopf {

class InconsistentPresentation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Multiplication context for a finite-dimensional algebra given by structure
/// constants. Products of basis elements are precomputed in sparse form.
class Algebra {
 public:
  using Term = std::pair<std::size_t, Scalar>;

  explicit Algebra(AlgebraPresentation p);

  const AlgebraPresentation& presentation() const { return p_; }
  std::size_t dim() const { return p_.dim; }
  const FieldSpec& field() const { return p_.field; }

  Element zero() const { return Element(dim()); }
  Element one() const { return p_.unit; }
  Element basis(std::size_t i) const { return Element::basis(dim(), i); }
  Element scalar(const Scalar& s) const { return s * one(); }

  const std::vector<Term>& basis_product(std::size_t i, std::size_t j) const {
    return table_[i * dim() + j];
  }

  Element mul(const Element& a, const Element& b) const;
  Element mul(std::initializer_list<Element> factors) const;
  /// Legwise product in H^{(x) r}.
  Tensor mul(const Tensor& a, const Tensor& b) const;
  Tensor one_tensor(std::size_t rank) const;

  LinMap left_mult(const Element& a) const;
  LinMap right_mult(const Element& a) const;
  std::optional<Element> inverse(const Element& a) const;
  /// x -> u x u^{-1}; throws if u is not a unit.
  LinMap conjugation(const Element& u) const;

 private:
  AlgebraPresentation p_;
  std::vector<std::vector<Term>> table_;
};

/// Leg operations for tensor_contract.
struct KeepLeg {};
using LegOp = std::variant<KeepLeg, LinMap, Functional>;
/// Output leg k is the ordered product of the listed input legs. Every input
/// leg not consumed by a functional must appear exactly once.
using MultPlan = std::vector<std::vector<std::size_t>>;

/// Applies functionals / linear maps to the legs of t, then multiplies legs in
/// H according to plan.
Tensor tensor_contract(const Algebra& alg, const Tensor& t, const std::vector<LegOp>& legs,
                       const MultPlan& plan);

/// Sum over nonzero entries c_idx of t of c_idx * term(idx).
template <class F>
Tensor expand(const Tensor& t, std::size_t dim, std::size_t out_rank, F&& term) {
  Tensor out(dim, out_rank);
  t.for_each_nonzero([&](const Tensor::Index& idx, const Scalar& c) {
    Tensor piece = term(idx);
    piece *= c;
    out += piece;
  });
  return out;
}

/// Computation context for a quasi-bialgebra: Delta, epsilon, the associator
/// and leg-wise operations on tensors.
class QuasiBialgebra {
 public:
  explicit QuasiBialgebra(QuasiBialgebraPresentation qb);

  const QuasiBialgebraPresentation& qb_presentation() const { return qb_; }
  const Algebra& alg() const { return alg_; }
  std::size_t dim() const { return alg_.dim(); }
  const FieldSpec& field() const { return alg_.field(); }

  const Tensor& phi() const { return qb_.phi; }
  const Tensor& phi_inv() const { return qb_.phi_inv; }
  const Functional& counit() const { return qb_.counit; }

  Tensor delta(const Element& a) const;
  Scalar eps(const Element& a) const { return counit()(a); }

  /// Delta applied to leg `leg`; the result has rank + 1.
  Tensor delta_leg(const Tensor& t, std::size_t leg) const;
  /// epsilon applied to leg `leg`; the result has rank - 1.
  Tensor eps_leg(const Tensor& t, std::size_t leg) const;
  Tensor map_leg(const Tensor& t, std::size_t leg, const LinMap& m) const;
  /// Inserts the unit as a new leg at position pos.
  Tensor insert_unit(const Tensor& t, std::size_t pos) const;

  /// (Delta (x) id) Delta (a), legs a_(1,1), a_(1,2), a_(2).
  Tensor delta_left_iterated(const Element& a) const;
  /// (id (x) Delta) Delta (a), legs a_(1), a_(2,1), a_(2,2).
  Tensor delta_right_iterated(const Element& a) const;

 protected:
  QuasiBialgebraPresentation qb_;
  Algebra alg_;
};

/// Adds the antipode S, its inverse, alpha and beta.
class QuasiHopfAlgebra : public QuasiBialgebra {
 public:
  explicit QuasiHopfAlgebra(QuasiHopfPresentation p);

  const QuasiHopfPresentation& presentation() const { return p_; }

  const Element& alpha() const { return p_.alpha; }
  const Element& beta() const { return p_.beta; }
  const LinMap& antipode() const { return p_.antipode; }
  /// Empty when S is singular.
  const std::optional<LinMap>& antipode_inverse() const { return s_inv_; }
  /// Throws InconsistentPresentation when S is singular.
  const LinMap& antipode_inverse_or_throw() const;

  Element S(const Element& a) const { return Element(antipode().apply(a.coeffs())); }
  Element S_inv(const Element& a) const;

 private:
  QuasiHopfPresentation p_;
  std::optional<LinMap> s_inv_;
};

}  // namespace qhopf
