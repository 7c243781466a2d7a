#pragma once

#include <string>

#include "weylrec/macdonald.hpp"
#include "weylrec/weylchar.hpp"

namespace weylrec {

// Unicode superscript digits, e.g. 12 -> "¹²".
std::string superscript(int n);

// "1 + 3q + 9q² + 22q³"
std::string poly_pretty(const PolyQ& p);
std::string series_pretty(const QSeries& s);
std::string ratfunc_pretty(const RatFuncQ& f);

// m-basis rendering, decreasing lex: "m[2,0] + (1+q)·m[1,1]"
std::string msym_pretty(const SymFunc<RatFuncQ>& f);

// Schur-basis rendering, increasing ell: "s[(2),0] + q·s[(0),1]"
std::string eta_pretty(const EtaTable& eta);

// One line per (weight, grade) pair: "(2,0): 1"
std::string character_pretty(const GradedCharacter& ch);

std::string reciprocity_pretty(const std::vector<ReciprocityRow>& rows);

std::string hilbert_pretty(const HilbertSeries& h);

}  // namespace weylrec
