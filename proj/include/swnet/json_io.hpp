#pragma once

#include <string>

#include "swnet/certificates.hpp"
#include "swnet/fourier.hpp"
#include "swnet/graph.hpp"
#include "swnet/harness.hpp"
#include "swnet/network.hpp"
#include "swnet/savitch.hpp"

#include "json.hpp"

namespace swnet {

using Json = nlohmann::ordered_json;

// Rationals travel as {"num": int, "den": int}; throws when a value does not
// fit in 64 bits.
Json rat_to_json(const Rat& r);
Rat rat_from_json(const Json& j);

Json digraph_to_json(const Digraph& g);
Digraph digraph_from_json(const Json& j);

Json network_to_json(const SwitchingNetwork& net);
SwitchingNetwork network_from_json(const Json& j);

Json labeling_to_json(const CKLabeling& lab, int n);
CKLabeling labeling_from_json(const Json& j, int n);

Json spectrum_to_json(const FourierSpectrum& s);
FourierSpectrum spectrum_from_json(const Json& j);

Json certificate_to_json(const Certificate& cert);
Certificate certificate_from_json(const Json& j);

Json verification_to_json(const VerificationReport& rep);
Json cert_report_to_json(const CertReport& rep);

// Bound report, as CSV rows (one per network, or a single row when there are
// none) and as a JSON mirror carrying the same fields. M is emitted as 0/0
// when the normalization is irrational.
std::string bound_to_csv(const BoundReport& rep, const std::string& family,
                         unsigned long long seed);
Json bound_to_json(const BoundReport& rep, const std::string& family);

// File helpers; parsing throws std::runtime_error on malformed input.
Json load_json(const std::string& path);
void save_text(const std::string& path, const std::string& text);

}  // namespace swnet
