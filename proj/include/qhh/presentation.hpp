#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "qhh/quiver.hpp"

namespace qhh {

// One relation generator: a linear combination of parallel paths with
// rational coefficients, canonical (no zero terms, sorted by path order).
struct RatTerm {
  mpq_class coeff;
  Path path;
};

struct RatRelation {
  std::vector<RatTerm> terms;
  int src = 0;
  int tgt = 0;
};

// A bound quiver presentation: quiver, relation generators, and the
// asserted nilpotency bound m. The modeled algebra is kQ / (<generators> + F^m);
// full admissibility of the user's intended ideal is their responsibility
// (see check_admissibility for the necessary test).
struct Presentation {
  Quiver quiver;
  std::vector<RatRelation> relations;
  int bound = 2;
};

// Canonicalize: merge duplicate paths, drop zeros, sort. Throws ParseError
// if terms are not parallel, a term length is outside [2, bound-1], or the
// relation collapses to zero.
RatRelation canonicalize_relation(const Quiver& q, std::vector<RatTerm> terms, int bound,
                                  int line = 0);

Presentation parse_bqp(std::istream& in);
Presentation parse_bqp_file(const std::string& filename);
std::string serialize_bqp(const Presentation& p);

std::string relation_str(const Quiver& q, const RatRelation& r);

}  // namespace qhh
