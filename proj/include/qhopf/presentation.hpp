#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "qhopf/scalar.hpp"
#include "qhopf/tensor.hpp"

namespace qhopf {

/// e_i e_j = sum_k mult[i,j,k] e_k.
struct AlgebraPresentation {
  FieldSpec field;
  std::size_t dim = 0;
  Tensor mult;
  Element unit;
  std::vector<std::string> labels;
};

/// Column k of `delta` (an n^2 x n matrix) is Delta(e_k) flattened row-major.
struct QuasiBialgebraPresentation {
  AlgebraPresentation algebra;
  Matrix delta;
  Functional counit;
  Tensor phi;
  Tensor phi_inv;
};

/// Column i of `antipode` is S(e_i).
struct QuasiHopfPresentation {
  QuasiBialgebraPresentation qb;
  LinMap antipode;
  Element alpha;
  Element beta;
  std::string name;
  std::string provenance;

  std::size_t dim() const { return qb.algebra.dim; }
  const FieldSpec& field() const { return qb.algebra.field; }
};

/// Throws DimensionError when any component has the wrong shape and
/// FieldMismatch when a coefficient lives outside the declared field.
void check_shapes(const QuasiHopfPresentation& p);

}  // namespace qhopf
