#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

#include "artin/artin.hpp"

namespace artin::io {

using json = nlohmann::json;

// Rounds to 15 significant digits so that dumped numbers are stable across platforms.
double round15(double v);

json element_json(const CanonicalElement& e);
json classification_json(const GeodesicWord& w);
json conj_key_json(const ConjKey& k);
json pcl_json(const PclResult& r);
json fftp_json(const FftpReport& r);
json asymptotics_json(const AsymptoticsReport& r);
json root_json(const RootResult& r, const IntPolynomial& poly);
json error_json(const std::string& kind, const std::string& message);

json dfa_json(const Dfa& d);
// Throws Error("BadJson") on malformed input.
Dfa dfa_from_json(const json& j);

template <class Seq>
void write_counts(std::ostream& os, const Seq& counts, std::size_t first = 0);

}  // namespace artin::io

#include <ostream>

template <class Seq>
void artin::io::write_counts(std::ostream& os, const Seq& counts, std::size_t first) {
    os << "n,count\n";
    for (std::size_t n = first; n < counts.size(); ++n) os << n << ',' << counts[n] << '\n';
}
