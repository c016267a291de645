#ifndef ZETACOMP_POSET_IO_HPP
#define ZETACOMP_POSET_IO_HPP

#include <string>

#include <json.hpp>

#include "zetacomp/incidence.hpp"
#include "zetacomp/poset.hpp"

namespace zetacomp {

/* The one wire format for posets:
     {"names": [..], "mode": "covers" | "relations", "pairs": [["a","b"], ..]}
   Pairs are ordered [lesser, greater]. Whitespace-insensitive. */
PosetSpec parse_poset_spec(const std::string& text); // throws ParseError with position info
PosetSpec load_poset_file(const std::string& path);  // throws ParseError on missing/bad files

/* Emits the wire format (mode "relations", every strict pair), so a poset
   round-trips exactly through parse + build. */
std::string poset_to_json(const Poset& p);

/* Machine-readable report object:
   {poset: {n, name}, chi, chi_reduced, det_complement,
    identities: [{name, lhs, rhs, pass}], summary: {passed, failed}}.
   Integers of unbounded size are rendered as decimal strings. */
nlohmann::ordered_json report_to_json(const VerificationReport& report);

} // namespace zetacomp

#endif
