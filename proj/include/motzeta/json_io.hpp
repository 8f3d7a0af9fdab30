#pragma once

#include "motzeta/abelian.hpp"
#include "motzeta/monodromy.hpp"
#include "motzeta/snc_model.hpp"
#include "motzeta/zeta_expr.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>

namespace motzeta {

// Unreadable input file (distinct from syntax errors inside the file).
struct IoError : std::runtime_error {
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

// Kodaira I_n fiber: an n-cycle of rational curves, all (N, nu) = (1, 0);
// singleton classes L-1, edge classes 1. n >= 2.
SncModelData kodaira_In(long n);

// Model schema:
// {"name":str, "dim":int,
//  "components":[{"id":str,"N":int,"nu":int}],
//  "pieces":[{"id":str,"J":[str,...],"tilde_class":str,
//             "facets":{compId:pieceId,...}?}]}
// A file {"generator":"kodaira_In","n":int} instantiates the parameterized
// I_n family instead (n_override, when >= 0, wins over the stored n).
SncModelData model_from_json(const nlohmann::json& j, long n_override = -1);
SncModelData load_model_file(const std::string& path, long n_override = -1);
nlohmann::json model_to_json(const SncModelData& m);

// Abelian inputs:
// {"mode":"semiabelian","class":str,"t":int,"ord":int}
// {"mode":"table","e":int,"c":str,"t_pot":int,
//  "rows":{"1":{"class":str,"ord":str,"t":int},...}}
struct AbelianInput {
    bool is_table = false;
    SemiAbelianInput semiabelian;
    AbelianOracleTable table;
};
AbelianInput abelian_from_json(const nlohmann::json& j);
AbelianInput load_abelian_file(const std::string& path);

// Report serializers (stable v1 schemas, documented in the README).
nlohmann::json pole_report_json(const std::vector<PoleEntry>& entries);
nlohmann::json mp_report_json(const MPReport& rep);
nlohmann::json normal_form_json(const NormalForm& nf);

} // namespace motzeta
