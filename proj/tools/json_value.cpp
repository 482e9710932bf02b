#include "json_value.hpp"

#include <cstdio>

#include "sl2optics/format.hpp"

namespace sl2cli {

JValue JValue::boolean(bool v) {
    JValue j;
    j.type_ = Type::Bool;
    j.bool_ = v;
    return j;
}

JValue JValue::number(double v) {
    JValue j;
    j.type_ = Type::Number;
    j.number_ = v;
    return j;
}

JValue JValue::string(std::string v) {
    JValue j;
    j.type_ = Type::String;
    j.string_ = std::move(v);
    return j;
}

JValue JValue::array() {
    JValue j;
    j.type_ = Type::Array;
    return j;
}

JValue JValue::object() {
    JValue j;
    j.type_ = Type::Object;
    return j;
}

JValue& JValue::push(JValue v) {
    items_.push_back(std::move(v));
    return *this;
}

JValue& JValue::set(std::string key, JValue v) {
    fields_.emplace_back(std::move(key), std::move(v));
    return *this;
}

namespace {

void write_escaped(std::string& out, const std::string& s) {
    out += '"';
    for (char ch : s) {
        switch (ch) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            case '\r': out += "\\r"; break;
            default:
                if (static_cast<unsigned char>(ch) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", ch);
                    out += buf;
                } else {
                    out += ch;
                }
        }
    }
    out += '"';
}

void indent(std::string& out, int depth) {
    out.append(static_cast<std::size_t>(depth) * 2, ' ');
}

} // namespace

void JValue::write(std::string& out, int depth) const {
    switch (type_) {
        case Type::Null:
            out += "null";
            return;
        case Type::Bool:
            out += bool_ ? "true" : "false";
            return;
        case Type::Number:
            out += sl2optics::format_double(number_);
            return;
        case Type::String:
            write_escaped(out, string_);
            return;
        case Type::Array: {
            if (items_.empty()) {
                out += "[]";
                return;
            }
            bool flat = true;
            for (const JValue& v : items_) flat = flat && v.scalar();
            if (flat) {
                out += '[';
                for (std::size_t i = 0; i < items_.size(); ++i) {
                    if (i) out += ", ";
                    items_[i].write(out, depth);
                }
                out += ']';
                return;
            }
            out += "[\n";
            for (std::size_t i = 0; i < items_.size(); ++i) {
                indent(out, depth + 1);
                items_[i].write(out, depth + 1);
                if (i + 1 < items_.size()) out += ',';
                out += '\n';
            }
            indent(out, depth);
            out += ']';
            return;
        }
        case Type::Object: {
            if (fields_.empty()) {
                out += "{}";
                return;
            }
            out += "{\n";
            for (std::size_t i = 0; i < fields_.size(); ++i) {
                indent(out, depth + 1);
                write_escaped(out, fields_[i].first);
                out += ": ";
                fields_[i].second.write(out, depth + 1);
                if (i + 1 < fields_.size()) out += ',';
                out += '\n';
            }
            indent(out, depth);
            out += '}';
            return;
        }
    }
}

std::string JValue::dump() const {
    std::string out;
    write(out, 0);
    out += '\n';
    return out;
}

} // namespace sl2cli
