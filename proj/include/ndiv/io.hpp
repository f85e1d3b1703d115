#pragma once

#include <iosfwd>
#include <string>

#include "json.hpp"
#include "ndiv/branch_function.hpp"
#include "ndiv/construct.hpp"
#include "ndiv/roots.hpp"
#include "ndiv/spectrum.hpp"

namespace ndiv {

using json = nlohmann::ordered_json;

// Support specs serialize as
//   {"center":[lo,hi], "positives":[[a,b],...], "generator":null}
//   {"center":[lo,hi], "positives":[],          "generator":{"period":p,"width":w}}
// with infinite endpoints encoded as the strings "inf" / "-inf".
json support_to_json(const SupportSpec& spec);
SupportSpec support_from_json(const json& j);

json function_to_json(const BranchFunction& f);
BranchFunction function_from_json(const json& j);

json params_to_json(const ConstructionParams& p);
ConstructionParams params_from_json(const json& j);

// {"passed":bool, "path":"analytic"|"grid"|"eigen", "witness":{"points":[...],"value":v}|null}
json verdict_to_json(const PsdVerdict& v);

// {"n":n, "k":k|null, "bound":n^(k-1)|"inf", "verified":count,
//  "roots":[{"pv":[p1,...], "pd_path":"analytic"|"grid"|"eigen"}, ...]}
json rootset_to_json(const RootSet& rs);

// Columns: t, bracket, atom_factor, value; one row per t = t0 + i*step <= t1.
void write_spectrum_csv(std::ostream& out, const CosineSpectrum& s, double t0, double t1,
                        double step);

// FNV-1a 64-bit hex digest of a byte string (stable content fingerprint).
std::string content_digest(const std::string& bytes);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace ndiv
