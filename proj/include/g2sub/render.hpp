#pragma once

#include "g2sub/conormal.hpp"
#include "g2sub/packets.hpp"
#include "g2sub/polynomial.hpp"
#include "g2sub/root_data.hpp"
#include "g2sub/sheaves.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace g2sub {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& x);
Json to_json(const BinaryCubic& r);   // ["r0","r1","r2","r3"]
Json to_json(const DualCubic& s);
Json to_json(const GroupElement& h);  // [["a","b"],["c","d"]]
Json to_json(const Line& u);          // ["u1","u2"]
Json to_json(const MatrixQ& m);
Json to_json(const PolynomialZ& p);   // lowest degree first
Json to_json(const RationalFunctionQ& f);
Json to_json(const GroupElementT<QuadraticNumber>& h);
Json to_json(const StabilizerDescription& st);
Json to_json(const Root& r);

struct Table {
    std::vector<std::string> rows;
    std::vector<std::string> cols;
    std::vector<std::vector<Json>> entries;  // integers or strings
};

// which: stalks, geomult, repmult, evs, nevs, fourier. Throws std::invalid_argument.
Table sheaf_table(const std::string& which, const SheafData& data = SheafData::encoded());
std::string render_markdown(const Table& t);
std::string render_csv(const Table& t);
Json to_json(const Table& t);

}  // namespace g2sub
