#ifndef ENRIQUES_JSON_IO_HPP
#define ENRIQUES_JSON_IO_HPP

#include <json.hpp>

#include "enriques/branch.hpp"
#include "enriques/involution.hpp"
#include "enriques/lattice.hpp"
#include "enriques/quadric.hpp"

namespace enriques::io {

using nlohmann::json;

// integers become JSON numbers when they fit in 53 bits, decimal strings otherwise
json int_to_json(const Int& z);
Int int_from_json(const json& j);

json rat_to_json(const Rat& q);  // "p/q" (or plain integer form)
Rat rat_from_json(const json& j);

json gq_to_json(const GQ& z);  // [re, im]
GQ gq_from_json(const json& j);

json lattice_to_json(const Lattice& l);
Lattice lattice_from_json(const json& j);

json ivec_to_json(const IVec& v);          // {"coords": [...]}
IVec ivec_from_json(const json& j);
json imat_to_json(const IMat& m);          // [[...], ...]
IMat imat_from_json(const json& j);
json isometry_to_json(const Isometry& m);  // {"matrix": [[...]]}
Isometry isometry_from_json(const json& j);

json involution_to_json(const ExtendedInvolution& inv);  // {"m": ..., "eps": ...}
ExtendedInvolution involution_from_json(const json& j);

json p1_involution_to_json(const P1Involution& f);  // {"matrix": [[re,im] x4], "anti": bool}
P1Involution p1_involution_from_json(const json& j);
json action_to_json(const QuadricAction& a);
QuadricAction action_from_json(const json& j);
json action_report_to_json(const ActionReport& r);

json branch_to_json(const BranchPolynomial& p);  // {"coeffs": [{"i","j","re","im"}]}
BranchPolynomial branch_from_json(const json& j);

json certificate_to_json(const TorusCertificate& c);
TorusCertificate certificate_from_json(const json& j);

json sample_to_json(const TorusSample& s);
json singularity_report_to_json(const SingularityReport& r);
json m0_result_to_json(const M0Result& r);

}  // namespace enriques::io

#endif
