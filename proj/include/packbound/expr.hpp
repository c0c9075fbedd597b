#pragma once

#include <string>
#include <vector>

#include "packbound/scoring.hpp"

// Expression trees over the scoring and geometry operations.  Catalog
// records store their claims as trees in prefix form; the prover
// evaluates them over cells in any scalar type.

namespace packbound {

// A slot of a simplex reference: either a box variable (var >= 0) or
// a fixed length.
struct Slot {
  int var = -1;
  double value = 0;
  std::string text;  // decimal form as serialized
};

struct Expr {
  enum class Kind { kConst, kNamed, kVar, kAdd, kSub, kMul, kDiv, kNeg, kMax, kMin, kApp };
  Kind kind = Kind::kConst;
  double cval = 0;
  std::string text;              // kConst: decimal string; kNamed/kApp: name
  int var = -1;                  // kVar
  double param = 0;              // kApp: numeric parameter
  bool has_param = false;
  std::string param_text;
  std::vector<Slot> slots;       // kApp: simplex / argument slots
  std::vector<Expr> args;

  static Expr constant(const std::string& dec);
  static Expr named(const std::string& name);
  static Expr variable(int i);
  static Expr app(const std::string& fn, std::vector<Slot> slots);
  static Expr app(const std::string& fn, std::vector<Slot> slots, double param,
                  const std::string& param_text);
};

Expr operator+(Expr a, Expr b);
Expr operator-(Expr a, Expr b);
Expr operator*(Expr a, Expr b);
Expr operator/(Expr a, Expr b);
Expr operator-(Expr a);
Expr emax(std::vector<Expr> args);
Expr emin(std::vector<Expr> args);

// resolvable named constants (zpt, pt, phi0, target, pi, sqrt2, ...)
Interval named_constant(const std::string& name);

// the function vocabulary; throws for unknown names
bool known_function(const std::string& name);

template <class T>
T eval_expr(const Expr& e, const std::vector<T>& env);

extern template double eval_expr<double>(const Expr&, const std::vector<double>&);
extern template Interval eval_expr<Interval>(const Expr&, const std::vector<Interval>&);
extern template Grad eval_expr<Grad>(const Expr&, const std::vector<Grad>&);


}  // namespace packbound
