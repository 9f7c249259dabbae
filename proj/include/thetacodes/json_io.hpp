#pragma once

// JSON and CSV encodings shared by the CLI and the tests. Ring elements are
// encoded as [a, b] meaning a + b w.

#include <json.hpp>

#include <string>
#include <vector>

#include "thetacodes/codes.hpp"
#include "thetacodes/enumerators.hpp"
#include "thetacodes/kernel.hpp"
#include "thetacodes/qseries.hpp"
#include "thetacodes/search.hpp"

namespace thetacodes {

using Json = nlohmann::ordered_json;

Json to_json(const QSeries& s);
QSeries series_from_json(const Json& j);

Json to_json(RingElement x);
RingElement element_from_json(const Json& j, int p);

/// "ell = r mod 4p": the residue class of levels giving this ring.
std::string ell_class(const RingContext& ctx);

Json to_json(const Code& c);
/// Reads a code; words are taken as given, generators only when present.
/// Without words the code is rebuilt from its generators.
Code code_from_json(const Json& j);

Json to_json(const WeightEnumerator& w);
WeightEnumerator enumerator_from_json(const Json& j);

Json to_json(const KernelReport& r);
Json to_json(const CollisionReport& r);

/// Rows n; two columns per level, "<ell>_swe" and "<ell>_theta".
std::string count_table_csv(const std::vector<CountCell>& cells);
/// Rows n, columns ell, cells are nullities.
std::string nullity_table_csv(const std::vector<std::int64_t>& ells, const std::vector<int>& ns,
                              const std::vector<std::vector<int>>& nullity);

}  // namespace thetacodes
