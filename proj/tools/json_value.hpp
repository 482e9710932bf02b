#pragma once

#include <string>
#include <utility>
#include <vector>

namespace sl2cli {

/// Insertion-ordered JSON document with fixed numeric formatting
/// (17 significant digits), so identical invocations serialize
/// byte-identically.
class JValue {
public:
    JValue() : type_(Type::Null) {}

    static JValue boolean(bool v);
    static JValue number(double v);
    static JValue string(std::string v);
    static JValue array();
    static JValue object();

    JValue& push(JValue v);                  // array append
    JValue& set(std::string key, JValue v);  // object append, keeps order

    /// Pretty form, 2-space indent, trailing newline.
    std::string dump() const;

private:
    enum class Type { Null, Bool, Number, String, Array, Object };

    Type type_;
    bool bool_ = false;
    double number_ = 0.0;
    std::string string_;
    std::vector<JValue> items_;
    std::vector<std::pair<std::string, JValue>> fields_;

    bool scalar() const { return type_ != Type::Array && type_ != Type::Object; }
    void write(std::string& out, int depth) const;
};

} // namespace sl2cli
