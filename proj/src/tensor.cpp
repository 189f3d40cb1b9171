#include "qhopf/tensor.hpp"

#include <sstream>

namespace qhopf {

namespace {

void check_dims(std::size_t a, std::size_t b, const char* what) {
  if (a != b) throw DimensionError(std::string(what) + ": dimension mismatch");
}

std::string join_nonzero(const Vector& v) {
  std::ostringstream os;
  os << "[";
  bool first = true;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    if (!first) os << ", ";
    first = false;
    os << i << ": " << v[i];
  }
  os << "]";
  return os.str();
}

}  // namespace

Element Element::basis(std::size_t dim, std::size_t i) {
  Element e(dim);
  e.c_.at(i) = Scalar{1};
  return e;
}

Element& Element::operator+=(const Element& o) {
  check_dims(dim(), o.dim(), "element sum");
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (!o.c_[i].is_zero()) c_[i] += o.c_[i];
  }
  return *this;
}

Element& Element::operator-=(const Element& o) {
  check_dims(dim(), o.dim(), "element difference");
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (!o.c_[i].is_zero()) c_[i] -= o.c_[i];
  }
  return *this;
}

Element& Element::operator*=(const Scalar& s) {
  for (auto& x : c_) {
    if (!x.is_zero()) x *= s;
  }
  return *this;
}

Element Element::operator-() const {
  Element r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

std::string Element::str() const { return join_nonzero(c_); }

Functional Functional::coordinate(std::size_t dim, std::size_t i) {
  Functional f(dim);
  f.c_.at(i) = Scalar{1};
  return f;
}

Scalar Functional::operator()(const Element& a) const {
  check_dims(dim(), a.dim(), "functional evaluation");
  Scalar s{0};
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (!c_[i].is_zero() && !a[i].is_zero()) s += c_[i] * a[i];
  }
  return s;
}

Functional Functional::compose(const Matrix& m) const {
  check_dims(dim(), m.rows(), "functional composition");
  return Functional(m.transpose().apply(c_));
}

Functional& Functional::operator+=(const Functional& o) {
  check_dims(dim(), o.dim(), "functional sum");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

Functional& Functional::operator-=(const Functional& o) {
  check_dims(dim(), o.dim(), "functional difference");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

Functional& Functional::operator*=(const Scalar& s) {
  for (auto& x : c_) x *= s;
  return *this;
}

std::string Functional::str() const { return join_nonzero(c_); }

Tensor::Tensor(std::size_t dim, std::size_t rank) : dim_(dim), rank_(rank) {
  std::size_t size = 1;
  for (std::size_t i = 0; i < rank; ++i) size *= dim;
  c_ = zero_vector(size);
}

Tensor Tensor::from_element(const Element& a) {
  Tensor t(a.dim(), 1);
  for (std::size_t i = 0; i < a.dim(); ++i) t.c_[i] = a[i];
  return t;
}

Tensor Tensor::scalar(const Scalar& s) {
  Tensor t(0, 0);
  t.c_[0] = s;
  return t;
}

std::size_t Tensor::flat(const Index& idx) const {
  if (idx.size() != rank_) throw DimensionError("tensor index has wrong rank");
  std::size_t f = 0;
  for (auto i : idx) {
    if (i >= dim_) throw DimensionError("tensor index out of range");
    f = f * dim_ + i;
  }
  return f;
}

Tensor::Index Tensor::unflat(std::size_t flat) const {
  Index idx(rank_);
  for (std::size_t k = rank_; k-- > 0;) {
    idx[k] = flat % dim_;
    flat /= dim_;
  }
  return idx;
}

Element Tensor::to_element() const {
  if (rank_ != 1) throw DimensionError("to_element on tensor of rank " + std::to_string(rank_));
  return Element(c_);
}

void Tensor::for_each_nonzero(const std::function<void(const Index&, const Scalar&)>& f) const {
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (!c_[i].is_zero()) f(unflat(i), c_[i]);
  }
}

std::size_t Tensor::nonzeros() const {
  std::size_t n = 0;
  for (const auto& s : c_) n += s.is_zero() ? 0 : 1;
  return n;
}

void Tensor::check_same_shape(const Tensor& o) const {
  if (rank_ != o.rank_ || (rank_ > 0 && dim_ != o.dim_)) throw DimensionError("tensor shape mismatch");
}

Tensor& Tensor::operator+=(const Tensor& o) {
  check_same_shape(o);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (!o.c_[i].is_zero()) c_[i] += o.c_[i];
  }
  return *this;
}

Tensor& Tensor::operator-=(const Tensor& o) {
  check_same_shape(o);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (!o.c_[i].is_zero()) c_[i] -= o.c_[i];
  }
  return *this;
}

Tensor& Tensor::operator*=(const Scalar& s) {
  for (auto& x : c_) {
    if (!x.is_zero()) x *= s;
  }
  return *this;
}

bool Tensor::operator==(const Tensor& o) const {
  return rank_ == o.rank_ && (rank_ == 0 || dim_ == o.dim_) && c_ == o.c_;
}

Tensor Tensor::permute(const std::vector<std::size_t>& perm) const {
  if (perm.size() != rank_) throw DimensionError("permutation has wrong length");
  Tensor out(dim_, rank_);
  for_each_nonzero([&](const Index& idx, const Scalar& c) {
    Index j(rank_);
    for (std::size_t k = 0; k < rank_; ++k) j[k] = idx[perm[k]];
    out.at(j) = c;
  });
  return out;
}

std::string Tensor::str() const {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for_each_nonzero([&](const Index& idx, const Scalar& c) {
    if (!first) os << ", ";
    first = false;
    os << "[";
    for (std::size_t k = 0; k < idx.size(); ++k) os << (k ? "," : "") << idx[k];
    os << "]: " << c;
  });
  os << "}";
  return os.str();
}

Tensor outer(const Tensor& a, const Tensor& b) {
  if (a.rank() > 0 && b.rank() > 0 && a.dim() != b.dim()) {
    throw DimensionError("outer product: dimension mismatch");
  }
  const std::size_t dim = a.rank() > 0 ? a.dim() : b.dim();
  Tensor out(dim, a.rank() + b.rank());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (!b[j].is_zero()) out[i * b.size() + j] = a[i] * b[j];
    }
  }
  return out;
}

Tensor outer(const Element& a, const Element& b) {
  return outer(Tensor::from_element(a), Tensor::from_element(b));
}

Tensor outer(std::initializer_list<Element> legs) {
  Tensor out = Tensor::scalar(Scalar{1});
  for (const auto& e : legs) out = outer(out, Tensor::from_element(e));
  return out;
}

}  // namespace qhopf
