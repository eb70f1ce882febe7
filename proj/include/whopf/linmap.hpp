#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "whopf/field.hpp"

namespace whopf {

// One tensor factor: a named space with an ordered basis.
struct Factor {
  std::string name;
  std::vector<std::string> basis;
  friend bool operator==(const Factor&, const Factor&) = default;
};

// A based space presented as a flat tensor word of factors, so that
// associators and unitors are identities.  The empty word is K.
class Space {
 public:
  Space() = default;
  static Space atom(std::string name, std::vector<std::string> basis);
  static Space unit() { return Space(); }

  std::size_t dim() const;
  bool is_unit() const { return factors_.empty(); }
  const std::vector<Factor>& factors() const { return factors_; }
  std::string name() const;
  // Basis vectors of a tensor word are written "x|y|z"; K has the single vector "1".
  std::string basis_label(std::size_t i) const;
  std::vector<std::string> basis_labels() const;
  std::optional<std::size_t> index_of(const std::string& label) const;

  friend Space tensor(const Space& a, const Space& b);
  friend bool operator==(const Space&, const Space&) = default;

 private:
  std::vector<Factor> factors_;
};

template <class... Rest>
Space tensor(const Space& a, const Space& b, const Rest&... rest) {
  if constexpr (sizeof...(rest) == 0)
    return tensor(a, b);
  else
    return tensor(tensor(a, b), rest...);
}

// Dense row-major matrix over a field.
struct Matrix {
  std::size_t rows = 0, cols = 0;
  FieldSpec field;
  std::vector<Scalar> data;

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c, FieldSpec f);
  Scalar& operator()(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
};

// Reduces m in place to reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref(Matrix& m);

// A linear map dom -> cod, a cod x dom matrix stored by sparse columns;
// column j is the image of the j-th basis vector of dom.
class LinMap {
 public:
  using Entry = std::pair<std::uint32_t, Scalar>;
  using Column = std::vector<Entry>;  // sorted by row, no zero values

  LinMap() = default;
  LinMap(Space dom, Space cod, FieldSpec f);

  static LinMap zero(const Space& dom, const Space& cod, FieldSpec f) { return LinMap(dom, cod, f); }
  static LinMap identity(const Space& s, FieldSpec f);
  // Scalar multiple of the unit K -> K.
  static LinMap scalar(const Scalar& s);

  const Space& dom() const { return dom_; }
  const Space& cod() const { return cod_; }
  FieldSpec field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_.size(); }
  // Dense copy.
  Matrix matrix() const;
  const Column& col(std::size_t j) const { return cols_[j]; }
  std::size_t nonzeros() const;

  Scalar at(std::size_t r, std::size_t c) const;
  void put(std::size_t r, std::size_t c, const Scalar& v);
  void set(std::size_t r, std::size_t c, long v) { put(r, c, Scalar(field_, v)); }

  // Same matrix, new spaces of equal dimension.
  LinMap retyped(const Space& dom, const Space& cod) const;
  std::vector<Scalar> column(std::size_t j) const;
  bool is_zero() const;
  std::size_t rank() const;

  // Composition: (g * f) = g ∘ f.
  friend LinMap operator*(const LinMap& g, const LinMap& f);
  friend LinMap operator+(const LinMap& a, const LinMap& b);
  friend LinMap operator-(const LinMap& a, const LinMap& b);
  friend LinMap operator*(const Scalar& s, const LinMap& a);
  friend bool operator==(const LinMap& a, const LinMap& b);
  friend bool operator!=(const LinMap& a, const LinMap& b) { return !(a == b); }

  // First column where the maps differ, if any.
  friend std::optional<std::size_t> first_difference(const LinMap& a, const LinMap& b);

  std::string to_string() const;

 private:
  friend LinMap tensor(const LinMap& f, const LinMap& g);
// g∘(a⊗b)∘f without forming a⊗b.
LinMap through_tensor(const LinMap& g, const LinMap& a, const LinMap& b, const LinMap& f);
  friend LinMap through_tensor(const LinMap& g, const LinMap& a, const LinMap& b, const LinMap& f);
  static LinMap combine(const LinMap& a, const LinMap& b, bool subtract);

  Space dom_, cod_;
  FieldSpec field_;
  std::size_t rows_ = 0;
  std::vector<Column> cols_;
};

LinMap tensor(const LinMap& f, const LinMap& g);

template <class... Rest>
LinMap tensor(const LinMap& a, const LinMap& b, const LinMap& c, const Rest&... rest) {
  return tensor(tensor(a, b), c, rest...);
}

// c_{V,W}: V⊗W -> W⊗V.
LinMap symmetry(const Space& v, const Space& w, FieldSpec f);

// Map defined by the images of basis vectors, given as sparse (cod index, value) lists.
LinMap from_images(const Space& dom, const Space& cod, FieldSpec f,
                   const std::function<void(std::size_t col, LinMap& out)>& fill);

struct Subspace {
  Space space;
  LinMap inclusion;  // space -> ambient, a monomorphism
};

// Kernel of f as a based subspace of dom(f); the basis is the RREF null-space basis.
Subspace kernel(const LinMap& f, const std::string& name);
// Largest subspace on which f and g agree.
Subspace equalizer(const LinMap& f, const LinMap& g, const std::string& name);
// Image of f as a subspace of cod(f), basis taken from the pivot columns of f.
Subspace image(const LinMap& f, const std::string& name);

struct Splitting {
  Space object;
  LinMap inj;   // object -> V
  LinMap proj;  // V -> object, proj ∘ inj = id and inj ∘ proj = q
};

Splitting split_idempotent(const LinMap& q, const std::string& name);

// The unique X with mono ∘ X = m.
LinMap factor_through(const LinMap& m, const LinMap& mono);
bool factors_through(const LinMap& m, const LinMap& mono);
bool same_image(const LinMap& a, const LinMap& b);
LinMap inverse(const LinMap& f);

// Solution set of a linear system in the unknown X: dom -> cod.
struct AffineFamily {
  LinMap particular;
  std::vector<LinMap> directions;

  std::size_t dim() const { return directions.size(); }
  // Number of members over GF(p), saturating at UINT64_MAX.
  std::uint64_t count() const;
  // Member with coordinates given by the base-p digits of index (first direction least significant).
  LinMap member(std::uint64_t index) const;
};

class LinearSystem {
 public:
  using Op = std::function<LinMap(const LinMap&)>;

  LinearSystem(Space dom, Space cod, FieldSpec f);

  // Adds the equation op(X) = rhs, op linear in X.
  void add(const Op& op, const LinMap& rhs);
  // Adds X = value on the given domain basis vector.
  void fix_column(std::size_t col, const std::vector<Scalar>& value);

  std::optional<AffineFamily> solve() const;

 private:
  Space dom_, cod_;
  FieldSpec field_;
  std::vector<std::vector<Scalar>> rows_;  // unknowns then rhs
};

// All X with l ∘ X = m.
std::optional<AffineFamily> solve_affine(const LinMap& l, const LinMap& m);

}  // namespace whopf
