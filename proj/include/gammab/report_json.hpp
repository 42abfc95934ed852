#ifndef GAMMAB_REPORT_JSON_HPP
#define GAMMAB_REPORT_JSON_HPP

#include <json.hpp>

#include "gammab/bcolor.hpp"
#include "gammab/family_lab.hpp"
#include "gammab/monotone.hpp"

namespace gammab {

using Json = nlohmann::ordered_json;

Json to_json(const VertexSet &s);
Json to_json(const Coloring &c);
Json to_json(const Ordering &o);
Json to_json(const ProfileRecord &r);
Json to_json(const MonotonicityVerdict &v);
Json to_json(const CheckResult &c);
Json to_json(const SweepReport &r);

} // namespace gammab

#endif
