#ifndef CONEBRANCH_JSON_IO_HPP
#define CONEBRANCH_JSON_IO_HPP

#include "conebranch/branching.hpp"

#include <json.hpp>

#include <string>

namespace conebranch {

using Json = nlohmann::ordered_json;

// floats at 12 significant digits, rationals as "p/q" strings
std::string format_double(double x);

Json surd_json(const Surd& s); // list of [radicand, "p/q"] pairs
Json algebra_json(const JordanAlgebra& A);
Json rep_json(const RepSpec& rep);
Json poly_json(const MultiPoly& p);
Json diffop_json(const DiffOp& op);
Json table_json(const BranchingTable& t);
std::string table_csv(const BranchingTable& t);

Json meta_json(std::uint64_t seed, std::uint64_t samples, const JordanAlgebra& A);

} // namespace conebranch

#endif
