#include "bcr/json_io.hpp"

#include <set>
#include <string>
#include <vector>

#include "bcr/errors.hpp"
#include "bcr/rational.hpp"

namespace bcr {

namespace {

using Json = nlohmann::ordered_json;

constexpr unsigned kMaxDimension = 4096;

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw parse_error(path + ": " + what);
}

void require_keys(const Json& obj, const std::string& path,
                  const std::set<std::string>& allowed) {
  for (const auto& item : obj.items()) {
    if (!allowed.count(item.key()))
      fail(path, "unknown field '" + item.key() + "'");
  }
}

Rat entry_to_rat(const Json& v, const std::string& path) {
  if (v.is_number_integer()) {
    if (v.is_number_unsigned()) return Rat(Int(v.get<std::uint64_t>()));
    return Rat(Int(v.get<std::int64_t>()));
  }
  if (v.is_string()) {
    try {
      return rat_parse(v.get<std::string>());
    } catch (const std::invalid_argument& e) {
      fail(path, e.what());
    }
  }
  if (v.is_number_float()) fail(path, "floating-point entries are not accepted; use integers or \"p/q\" strings");
  fail(path, "matrix entry must be an integer or a rational string");
}

RatMatrix matrix_from_json(const Json& v, const std::string& path) {
  if (!v.is_array()) fail(path, "expected an array of arrays (matrix rows)");
  std::vector<std::vector<Rat>> rows;
  rows.reserve(v.size());
  std::size_t width = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Json& row = v[i];
    const std::string row_path = path + "[" + std::to_string(i) + "]";
    if (!row.is_array()) fail(row_path, "expected an array (matrix row)");
    if (i == 0) {
      width = row.size();
    } else if (row.size() != width) {
      fail(row_path, "row length " + std::to_string(row.size()) +
                         " differs from first row length " + std::to_string(width));
    }
    std::vector<Rat> entries;
    entries.reserve(row.size());
    for (std::size_t jcol = 0; jcol < row.size(); ++jcol) {
      entries.push_back(
          entry_to_rat(row[jcol], row_path + "[" + std::to_string(jcol) + "]"));
    }
    rows.push_back(std::move(entries));
  }
  if (rows.empty()) return RatMatrix(0, 0);
  return RatMatrix(rows);
}

Json matrix_to_json(const RatMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(rat_to_string(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

SeifertData input_document_from_json(const Json& j) {
  if (!j.is_object()) fail("$", "expected a JSON object");
  require_keys(j, "$", {"n", "integral", "blocks"});

  if (!j.contains("n")) fail("$.n", "missing required field");
  const Json& jn = j["n"];
  if (!jn.is_number_integer() || jn.is_number_float())
    fail("$.n", "must be a positive integer");
  if (jn.is_number_unsigned()) {
    if (jn.get<std::uint64_t>() == 0) fail("$.n", "must be >= 1");
  } else if (jn.get<std::int64_t>() < 1) {
    fail("$.n", "must be >= 1");
  }
  const std::uint64_t n_raw = jn.get<std::uint64_t>();
  if (n_raw > kMaxDimension)
    fail("$.n", "exceeds the supported limit of " + std::to_string(kMaxDimension));
  const unsigned n = static_cast<unsigned>(n_raw);

  SeifertData data;
  data.n = n;
  data.integral = n >= 2;
  if (j.contains("integral")) {
    const Json& ji = j["integral"];
    if (!ji.is_boolean()) fail("$.integral", "must be a boolean");
    data.integral = ji.get<bool>();
  }

  data.blocks.assign(n, SeifertBlock{RatMatrix(0, 0), RatMatrix(0, 0)});
  if (j.contains("blocks")) {
    const Json& jb = j["blocks"];
    if (!jb.is_array()) fail("$.blocks", "expected an array of block objects");
    std::set<std::uint64_t> seen;
    for (std::size_t i = 0; i < jb.size(); ++i) {
      const std::string path = "$.blocks[" + std::to_string(i) + "]";
      const Json& blk = jb[i];
      if (!blk.is_object()) fail(path, "expected an object");
      require_keys(blk, path, {"d", "v_plus", "v_minus"});

      if (!blk.contains("d")) fail(path + ".d", "missing required field");
      const Json& jd = blk["d"];
      if (!jd.is_number_integer() || jd.is_number_float())
        fail(path + ".d", "must be an integer in [1, n]");
      if (!jd.is_number_unsigned() && jd.get<std::int64_t>() < 1)
        fail(path + ".d", "must be >= 1");
      const std::uint64_t d = jd.get<std::uint64_t>();
      if (d < 1 || d > n)
        fail(path + ".d", "degree " + std::to_string(d) + " outside [1, " +
                              std::to_string(n) + "]");
      if (!seen.insert(d).second)
        fail(path + ".d", "duplicate degree " + std::to_string(d));

      if (!blk.contains("v_plus")) fail(path + ".v_plus", "missing required field");
      RatMatrix vp = matrix_from_json(blk["v_plus"], path + ".v_plus");
      RatMatrix vm(0, 0);
      if (blk.contains("v_minus")) {
        vm = matrix_from_json(blk["v_minus"], path + ".v_minus");
      } else {
        if (!vp.is_square())
          fail(path + ".v_plus",
               "must be square when v_minus is omitted (v_minus defaults to v_plus + I)");
        vm = vp + RatMatrix::identity(vp.rows());
      }
      data.blocks[static_cast<std::size_t>(d - 1)] = SeifertBlock{std::move(vp), std::move(vm)};
    }
  }
  return data;
}

SeifertData parse_input_document(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw parse_error(std::string("invalid JSON: ") + e.what());
  }
  return input_document_from_json(j);
}

Json input_document_to_json(const SeifertData& data) {
  Json j = Json::object();
  j["n"] = data.n;
  j["integral"] = data.integral;
  Json blocks = Json::array();
  for (unsigned d = 1; d <= data.n; ++d) {
    const SeifertBlock& b = data.blocks[d - 1];
    Json blk = Json::object();
    blk["d"] = d;
    blk["v_plus"] = matrix_to_json(b.v_plus);
    blk["v_minus"] = matrix_to_json(b.v_minus);
    blocks.push_back(std::move(blk));
  }
  j["blocks"] = std::move(blocks);
  return j;
}

std::string input_document_to_text(const SeifertData& data) {
  return input_document_to_json(data).dump(2) + "\n";
}

}  // namespace bcr
