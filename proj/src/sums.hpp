#pragma once

// Helpers for evaluating Sweedler-style sums over the nonzero entries of
// coefficient tensors.

#include <string>
#include <vector>

#include "qhopf/algebra.hpp"

namespace qhopf::detail {

template <class F>
Element sum_element(const Tensor& t, std::size_t dim, F&& term) {
  Element out(dim);
  t.for_each_nonzero([&](const Tensor::Index& idx, const Scalar& c) { out += c * term(idx); });
  return out;
}

template <class F>
Tensor sum_tensor(const Tensor& t, std::size_t dim, std::size_t rank, F&& term) {
  return expand(t, dim, rank, term);
}

/// Sum over pairs of nonzero entries of a and b.
template <class F>
Tensor sum_pairs(const Tensor& a, const Tensor& b, std::size_t dim, std::size_t rank, F&& term) {
  Tensor out(dim, rank);
  a.for_each_nonzero([&](const Tensor::Index& i, const Scalar& ca) {
    b.for_each_nonzero([&](const Tensor::Index& j, const Scalar& cb) {
      Tensor piece = term(i, j);
      piece *= ca * cb;
      out += piece;
    });
  });
  return out;
}

/// Cached images of basis vectors under S and S^{-1}.
class BasisImages {
 public:
  explicit BasisImages(const QuasiHopfAlgebra& h) : h_(h) {
    for (std::size_t i = 0; i < h.dim(); ++i) s_.push_back(h.S(h.alg().basis(i)));
    if (h.antipode_inverse()) {
      for (std::size_t i = 0; i < h.dim(); ++i) s_inv_.push_back(h.S_inv(h.alg().basis(i)));
    }
  }

  const Element& e(std::size_t i) const { return basis_[i]; }
  const Element& S(std::size_t i) const { return s_[i]; }
  const Element& S_inv(std::size_t i) const {
    if (s_inv_.empty()) h_.antipode_inverse_or_throw();
    return s_inv_[i];
  }

 private:
  const QuasiHopfAlgebra& h_;
  std::vector<Element> s_;
  std::vector<Element> s_inv_;
  std::vector<Element> basis_ = make_basis(h_.dim());

  static std::vector<Element> make_basis(std::size_t n) {
    std::vector<Element> b;
    for (std::size_t i = 0; i < n; ++i) b.push_back(Element::basis(n, i));
    return b;
  }
};

inline std::string label(const AlgebraPresentation& a, std::size_t i) {
  if (i < a.labels.size() && !a.labels[i].empty()) return a.labels[i];
  return "e" + std::to_string(i);
}

}  // namespace qhopf::detail
