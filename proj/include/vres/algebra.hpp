#pragma once

#include <optional>
#include <vector>

#include "vres/groebner.hpp"
#include "vres/ring.hpp"

namespace vres {

// Submodules of a graded free module F are given by a GradedMatrix whose rows
// are the twists of F and whose columns generate the submodule.

ModOrder defaultOrder(const std::vector<Deg>& twists);
Vec columnVec(const GradedMatrix& a, int v, int compOffset = 0);
GroebnerBasis gbOf(const Ring& R, const GradedMatrix& a);

bool isMonomialMatrix(const GradedMatrix& a);

// Im a ⊆ Im b.
bool contained(const Ring& R, const GradedMatrix& a, const GradedMatrix& b);
bool contained(const Ring& R, const GradedMatrix& a, const GroebnerBasis& gb);
bool sameSubmodule(const Ring& R, const GradedMatrix& a, const GradedMatrix& b);

// Minimal homogeneous generating subset of the columns.
GradedMatrix mingens(const Ring& R, const GradedMatrix& a);
// Generators of ker a (columns in the source of a); minimal when requested.
GradedMatrix syz(const Ring& R, const GradedMatrix& a, bool minimal = true);
// X with a * X = b; throws DomainError when some column of b is outside Im a.
GradedMatrix liftThrough(const Ring& R, const GradedMatrix& a, const GradedMatrix& b);

GradedMatrix quotient(const Ring& R, const GradedMatrix& n, const Poly& f);
GradedMatrix quotientIdeal(const Ring& R, const GradedMatrix& n, const std::vector<Poly>& j);
GradedMatrix intersect(const Ring& R, const GradedMatrix& a, const GradedMatrix& b);
// B-saturation of a submodule.
GradedMatrix saturate(const Ring& R, const GradedMatrix& n);
// F/n is irrelevant, i.e. the saturation of n is all of F.
bool isIrrelevantQuotient(const Ring& R, const GradedMatrix& n);

// Ideals are 1 x k matrices with row twist 0.
GradedMatrix idealMatrix(const Ring& R, const std::vector<Poly>& gens);
std::vector<Poly> idealGens(const GradedMatrix& a);
GradedMatrix annihilator(const Ring& R, const GradedMatrix& n);

// Krull dimension of F/n; -1 for the zero module.
int krullDim(const Ring& R, const GradedMatrix& n);
int monomialDim(int nvars, const std::vector<unsigned>& supports);
// dim_k (F/n)_a
long hilbertFunction(const Ring& R, const GradedMatrix& n, const Deg& a);
long hilbertFunction(const Ring& R, const GroebnerBasis& gb, const std::vector<Deg>& twists, const Deg& a);

std::vector<Mono> minimalizeMonomials(std::vector<Mono> gens);
// Irredundant irreducible components, each stored as its vector of pure-power exponents.
std::vector<Mono> irreducibleDecomposition(const std::vector<Mono>& gens);

}  // namespace vres
