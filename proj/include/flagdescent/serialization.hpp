#ifndef FLAGDESCENT_SERIALIZATION_HPP
#define FLAGDESCENT_SERIALIZATION_HPP

#include <json.hpp>

#include "flagdescent/descent.hpp"
#include "flagdescent/int_lattice.hpp"
#include "flagdescent/rep_mult.hpp"
#include "flagdescent/root_system.hpp"
#include "flagdescent/weyl.hpp"

namespace flagdescent {

/// Integers that fit in 64 bits become JSON numbers, larger ones decimal strings.
nlohmann::json big_to_json(const BigInt& x);
BigInt big_from_json(const nlohmann::json& j);

/// {family, rank, cartan, positive_roots, theta, d}
nlohmann::json to_json(const RootSystem& rs);

/// Canonical basis rows.
nlohmann::json to_json(const IntegerLattice& lat);

/// Canonical word, 1-based.
nlohmann::json to_json(const WeylElement& w);

nlohmann::json to_json(const QuotientStructure& q);
nlohmann::json to_json(const StabilizerStructure& s);
nlohmann::json to_json(const ProbeResult& p);
ProbeResult probe_from_json(const nlohmann::json& j);

/// {type, rank, lambda, mu, nu, outcome, reasons: [{rule, result, witness}], probe}
nlohmann::json to_json(const DescentVerdict& v);
DescentVerdict verdict_from_json(const nlohmann::json& j);

}  // namespace flagdescent

#endif  // FLAGDESCENT_SERIALIZATION_HPP
