#include "weylcup/bwb.hpp"

#include "weylcup/charmod.hpp"

namespace weylcup {

BwbAnswer bwbClassify(const RootSystem& rs, const Weight& lambda) {
  BwbAnswer ans;
  Weight x = lambda + rs.rho();
  // Sort lambda+rho into the dominant chamber with simple reflections,
  // recording the element; a wall hit anywhere means singular.
  WeylElement w = WeylElement::identity(rs);
  int n = rs.rank();
  while (true) {
    int pick = -1;
    for (int i = 0; i < n; ++i) {
      if (x[i] == 0) {
        ans.vanishing = true;
        return ans;
      }
      if (x[i] < 0 && pick < 0) pick = i;
    }
    if (pick < 0) break;
    WeylElement s = WeylElement::simpleReflection(rs, pick + 1);
    x = s.actWeight(x);
    w = s * w;
  }
  ans.vanishing = false;
  ans.w = w;
  ans.degree = w.length(rs);
  ans.dualHighestWeight = x - rs.rho();
  return ans;
}

Weight serreDual(const RootSystem& rs, const Weight& lambda) {
  return -lambda - 2 * rs.rho();
}

CupProblem makeCupProblem(const RootSystem& rs, const std::vector<Weight>& lambdas) {
  CupProblem p;
  p.lambdas = lambdas;
  p.lambda = Weight::zero(rs.rank());
  for (const Weight& l : lambdas) {
    if (!rs.isRegular(l)) throw SingularWeight("factor weight " + l.str() + " is singular");
    p.lambda = p.lambda + l;
    p.factors.push_back(bwbClassify(rs, l));
  }
  if (!rs.isRegular(p.lambda)) throw SingularWeight("sum weight " + p.lambda.str() + " is singular");
  p.target = bwbClassify(rs, p.lambda);
  return p;
}

CupProblem symmetrize(const RootSystem& rs, const CupProblem& p) {
  Weight check = Weight::zero(rs.rank());
  for (const Weight& l : p.lambdas) check = check + l;
  if (!(check == p.lambda)) throw SumMismatch("problem target is not the sum of its factors");
  std::vector<Weight> ls = p.lambdas;
  ls.push_back(serreDual(rs, p.lambda));
  CupProblem sym = makeCupProblem(rs, ls);
  return sym;
}

CupProblem desymmetrize(const RootSystem& rs, const CupProblem& sym, size_t index) {
  if (index >= sym.lambdas.size()) throw BadIndex("desymmetrize index out of range");
  Weight total = Weight::zero(rs.rank());
  for (const Weight& l : sym.lambdas) total = total + l;
  if (!(total == -2 * rs.rho()))
    throw SumMismatch("not a symmetric problem: weights do not sum to -2rho");
  std::vector<Weight> ls;
  for (size_t i = 0; i < sym.lambdas.size(); ++i)
    if (i != index) ls.push_back(sym.lambdas[i]);
  return makeCupProblem(rs, ls);
}

}  // namespace weylcup
