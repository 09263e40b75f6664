#include "riesz/report.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace riesz::report {

std::string fmt(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

Value::Value(bool b) : kind_(Kind::boolean), b_(b) {}
Value::Value(double x) : kind_(Kind::number), num_(x) {}
Value::Value(int i) : kind_(Kind::integer), int_(i) {}
Value::Value(std::int64_t i) : kind_(Kind::integer), int_(i) {}
Value::Value(std::uint64_t u) : kind_(Kind::uinteger), uint_(u) {}
Value::Value(const char* s) : kind_(Kind::string), str_(s) {}
Value::Value(std::string s) : kind_(Kind::string), str_(std::move(s)) {}

Value Value::object() {
    Value v;
    v.kind_ = Kind::object;
    return v;
}

Value Value::array() {
    Value v;
    v.kind_ = Kind::array;
    return v;
}

Value& Value::set(const std::string& key, Value v) {
    if (kind_ != Kind::object)
        throw std::logic_error("riesz::report: set on non-object");
    for (auto& [k, existing] : obj_) {
        if (k == key) {
            existing = std::move(v);
            return *this;
        }
    }
    obj_.emplace_back(key, std::move(v));
    return *this;
}

Value& Value::push(Value v) {
    if (kind_ != Kind::array)
        throw std::logic_error("riesz::report: push on non-array");
    arr_.push_back(std::move(v));
    return *this;
}

namespace {

void write_escaped(std::string& out, const std::string& s) {
    out += '"';
    for (unsigned char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\b': out += "\\b"; break;
            case '\f': out += "\\f"; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '\t': out += "\\t"; break;
            default:
                if (c < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", c);
                    out += buf;
                } else {
                    out += static_cast<char>(c);
                }
        }
    }
    out += '"';
}

void write_newline(std::string& out, int indent, int depth) {
    if (indent <= 0) return;
    out += '\n';
    out.append(static_cast<std::size_t>(indent) * depth, ' ');
}

} // namespace

void Value::write(std::string& out, int indent, int depth) const {
    switch (kind_) {
        case Kind::null:
            out += "null";
            return;
        case Kind::boolean:
            out += b_ ? "true" : "false";
            return;
        case Kind::number:
            if (!std::isfinite(num_)) {
                out += "null";
            } else {
                char buf[64];
                std::snprintf(buf, sizeof buf, "%.17g", num_);
                out += buf;
            }
            return;
        case Kind::integer:
            out += std::to_string(int_);
            return;
        case Kind::uinteger:
            out += std::to_string(uint_);
            return;
        case Kind::string:
            write_escaped(out, str_);
            return;
        case Kind::array: {
            if (arr_.empty()) {
                out += "[]";
                return;
            }
            out += '[';
            for (std::size_t i = 0; i < arr_.size(); ++i) {
                if (i) out += ',';
                write_newline(out, indent, depth + 1);
                arr_[i].write(out, indent, depth + 1);
            }
            write_newline(out, indent, depth);
            out += ']';
            return;
        }
        case Kind::object: {
            if (obj_.empty()) {
                out += "{}";
                return;
            }
            out += '{';
            for (std::size_t i = 0; i < obj_.size(); ++i) {
                if (i) out += ',';
                write_newline(out, indent, depth + 1);
                write_escaped(out, obj_[i].first);
                out += indent > 0 ? ": " : ":";
                obj_[i].second.write(out, indent, depth + 1);
            }
            write_newline(out, indent, depth);
            out += '}';
            return;
        }
    }
}

std::string Value::dump(int indent) const {
    std::string out;
    write(out, indent, 0);
    return out;
}

ValidationResult validate_report(const std::string& json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        return {false, std::string("parse error: ") + e.what()};
    }
    if (!j.is_object()) return {false, "top level is not an object"};
    auto missing = [&](const char* key) { return !j.contains(key); };
    if (missing("command")) return {false, "missing key: command"};
    if (!j["command"].is_string()) return {false, "command is not a string"};
    if (missing("params")) return {false, "missing key: params"};
    if (!j["params"].is_object()) return {false, "params is not an object"};
    if (missing("seed")) return {false, "missing key: seed"};
    if (!j["seed"].is_number_unsigned())
        return {false, "seed is not an unsigned integer"};
    if (missing("records")) return {false, "missing key: records"};
    if (!j["records"].is_array()) return {false, "records is not an array"};
    if (missing("summary")) return {false, "missing key: summary"};
    const auto& s = j["summary"];
    if (!s.is_object()) return {false, "summary is not an object"};
    if (!s.contains("pass_count") || !s["pass_count"].is_number_integer())
        return {false, "summary.pass_count is not an integer"};
    if (!s.contains("fail_count") || !s["fail_count"].is_number_integer())
        return {false, "summary.fail_count is not an integer"};
    if (!s.contains("min_margin_log"))
        return {false, "missing key: summary.min_margin_log"};
    if (!s["min_margin_log"].is_number() && !s["min_margin_log"].is_null())
        return {false, "summary.min_margin_log is not a number or null"};
    return {true, ""};
}

std::string scan_csv(const mz::ScanReport& report) {
    std::string out =
        "d,delta_circ,A_exact,B_exact,bound_name,bound_value_log,margin_log,pass\n";
    for (const auto& rec : report.records) {
        for (const auto& c : rec.checks) {
            out += std::to_string(rec.d);
            out += ',';
            out += fmt(rec.delta_circ);
            out += ',';
            out += fmt(rec.A);
            out += ',';
            out += fmt(rec.B);
            out += ',';
            out += c.bound_name;
            out += ',';
            out += fmt(c.value_log);
            out += ',';
            out += fmt(c.margin_log);
            out += ',';
            out += c.pass ? "true" : "false";
            out += '\n';
        }
    }
    return out;
}

std::string verify_csv(const mz::VerifyReport& report) {
    std::string out = "trial,d,A_exact,B_exact,bound,bound_log,margin_log,pass\n";
    for (const auto& rec : report.records) {
        out += std::to_string(rec.trial);
        out += ',';
        out += std::to_string(rec.d);
        out += ',';
        out += fmt(rec.A);
        out += ',';
        out += fmt(rec.B);
        out += ',';
        out += fmt(rec.bound);
        out += ',';
        out += fmt(rec.bound_log);
        out += ',';
        out += fmt(rec.margin_log);
        out += ',';
        out += rec.pass ? "true" : "false";
        out += '\n';
    }
    return out;
}

std::string grid_csv(const std::string& header_json, const std::string& xname,
                     const std::string& vname, const std::vector<double>& x,
                     const std::vector<double>& v) {
    if (x.size() != v.size())
        throw std::invalid_argument("riesz::report: grid column size mismatch");
    std::string out = "# " + header_json + "\n" + xname + "," + vname + "\n";
    for (std::size_t i = 0; i < x.size(); ++i) {
        out += fmt(x[i]);
        out += ',';
        out += fmt(v[i]);
        out += '\n';
    }
    return out;
}

} // namespace riesz::report
