#ifndef RIESZ_REPORT_HPP
#define RIESZ_REPORT_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "riesz/mz.hpp"

// Deterministic report serialization. Keys keep insertion order, floats are
// printed with 17 significant digits, and non-finite values become null in
// JSON (inf/-inf/nan text in CSV), so identical runs produce identical bytes.

namespace riesz::report {

// %.17g, with non-finite values spelled inf / -inf / nan
std::string fmt(double x);

class Value {
public:
    Value() = default; // null
    Value(bool b);
    Value(double x);
    Value(int i);
    Value(std::int64_t i);
    Value(std::uint64_t u);
    Value(const char* s);
    Value(std::string s);

    static Value object();
    static Value array();

    // object append; an existing key is overwritten in place
    Value& set(const std::string& key, Value v);
    // array append
    Value& push(Value v);

    bool is_object() const { return kind_ == Kind::object; }
    bool is_array() const { return kind_ == Kind::array; }

    std::string dump(int indent = 2) const;

private:
    enum class Kind { null, boolean, number, integer, uinteger, string, array, object };
    Kind kind_ = Kind::null;
    bool b_ = false;
    double num_ = 0.0;
    std::int64_t int_ = 0;
    std::uint64_t uint_ = 0;
    std::string str_;
    std::vector<Value> arr_;
    std::vector<std::pair<std::string, Value>> obj_;

    void write(std::string& out, int indent, int depth) const;
};

struct ValidationResult {
    bool ok = false;
    std::string error;
};

// checks the report envelope: an object carrying command (string),
// params (object), seed (unsigned integer), records (array), and
// summary {pass_count, fail_count, min_margin_log (number or null)}
ValidationResult validate_report(const std::string& json_text);

// one row per (record, check):
// d,delta_circ,A_exact,B_exact,bound_name,bound_value_log,margin_log,pass
std::string scan_csv(const mz::ScanReport& report);

// trial,d,A_exact,B_exact,bound,bound_log,margin_log,pass
std::string verify_csv(const mz::VerifyReport& report);

// "# <header_json>" then "<xname>,<vname>" then one row per sample
std::string grid_csv(const std::string& header_json, const std::string& xname,
                     const std::string& vname, const std::vector<double>& x,
                     const std::vector<double>& v);

} // namespace riesz::report

#endif
