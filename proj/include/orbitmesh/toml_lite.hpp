#pragma once

// Minimal TOML-subset reader used for the main config and experiment plans.
// Supported grammar: comments (#), [table], [[array-of-table]], and
// key = value lines where value is a quoted string, integer, float,
// boolean, or a single-line array of those.

#include <charconv>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace orbitmesh::toml {

class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

struct Value {
    enum class Type { String, Integer, Float, Boolean, Array };

    Type type = Type::String;
    std::string string_value;
    std::int64_t int_value = 0;
    double float_value = 0.0;
    bool bool_value = false;
    std::vector<Value> array_value;

    double as_number() const {
        if (type == Type::Integer) return static_cast<double>(int_value);
        if (type == Type::Float) return float_value;
        throw std::runtime_error("value is not a number");
    }
};

struct Table {
    std::map<std::string, Value> values;

    bool has(const std::string& key) const { return values.count(key) != 0; }

    const Value* find(const std::string& key) const {
        auto it = values.find(key);
        return it == values.end() ? nullptr : &it->second;
    }
};

struct Document {
    Table root;
    std::map<std::string, Table> tables;
    std::map<std::string, std::vector<Table>> table_arrays;

    const Table& table_or_empty(const std::string& name) const {
        static const Table empty;
        auto it = tables.find(name);
        return it == tables.end() ? empty : it->second;
    }

    const std::vector<Table>& array_of(const std::string& name) const {
        static const std::vector<Table> empty;
        auto it = table_arrays.find(name);
        return it == table_arrays.end() ? empty : it->second;
    }
};

namespace detail {

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
        s.remove_suffix(1);
    }
    return s;
}

inline bool is_bare_key_char(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
           c == '_' || c == '-' || c == '.' || c == ':';
}

// Parses a quoted string starting at s[pos] == '"'. Advances pos past the
// closing quote.
inline std::string parse_quoted(std::string_view s, std::size_t& pos, int line) {
    std::string out;
    ++pos;  // opening quote
    while (pos < s.size()) {
        char c = s[pos];
        if (c == '"') {
            ++pos;
            return out;
        }
        if (c == '\\') {
            ++pos;
            if (pos >= s.size()) break;
            switch (s[pos]) {
                case 'n': out.push_back('\n'); break;
                case 't': out.push_back('\t'); break;
                case 'r': out.push_back('\r'); break;
                case '"': out.push_back('"'); break;
                case '\\': out.push_back('\\'); break;
                default:
                    throw ParseError(line, std::string("unknown escape \\") + s[pos]);
            }
            ++pos;
            continue;
        }
        out.push_back(c);
        ++pos;
    }
    throw ParseError(line, "unterminated string");
}

inline Value parse_scalar(std::string_view token, int line) {
    Value v;
    if (token == "true" || token == "false") {
        v.type = Value::Type::Boolean;
        v.bool_value = token == "true";
        return v;
    }
    bool looks_float = token.find_first_of(".eE") != std::string_view::npos;
    if (!looks_float) {
        std::int64_t iv = 0;
        auto [ptr, ec] = std::from_chars(token.begin(), token.end(), iv);
        if (ec == std::errc() && ptr == token.end()) {
            v.type = Value::Type::Integer;
            v.int_value = iv;
            return v;
        }
    }
    double dv = 0.0;
    auto [ptr, ec] = std::from_chars(token.begin(), token.end(), dv);
    if (ec == std::errc() && ptr == token.end()) {
        v.type = Value::Type::Float;
        v.float_value = dv;
        return v;
    }
    throw ParseError(line, "bad value '" + std::string(token) + "'");
}

// Parses one value starting at s[pos]; advances pos past it.
inline Value parse_value(std::string_view s, std::size_t& pos, int line) {
    while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
    if (pos >= s.size()) throw ParseError(line, "missing value");
    if (s[pos] == '"') {
        Value v;
        v.type = Value::Type::String;
        v.string_value = parse_quoted(s, pos, line);
        return v;
    }
    if (s[pos] == '[') {
        Value v;
        v.type = Value::Type::Array;
        ++pos;
        while (true) {
            while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
            if (pos >= s.size()) throw ParseError(line, "unterminated array");
            if (s[pos] == ']') {
                ++pos;
                return v;
            }
            v.array_value.push_back(parse_value(s, pos, line));
            while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
            if (pos < s.size() && s[pos] == ',') {
                ++pos;
                continue;
            }
            if (pos < s.size() && s[pos] == ']') {
                ++pos;
                return v;
            }
            throw ParseError(line, "expected ',' or ']' in array");
        }
    }
    std::size_t start = pos;
    while (pos < s.size() && s[pos] != ' ' && s[pos] != '\t' && s[pos] != ',' && s[pos] != ']' &&
           s[pos] != '#') {
        ++pos;
    }
    return parse_scalar(s.substr(start, pos - start), line);
}

inline std::string parse_key(std::string_view s, std::size_t& pos, int line) {
    while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
    if (pos < s.size() && s[pos] == '"') {
        return parse_quoted(s, pos, line);
    }
    std::size_t start = pos;
    while (pos < s.size() && is_bare_key_char(s[pos])) ++pos;
    if (pos == start) throw ParseError(line, "missing key");
    return std::string(s.substr(start, pos - start));
}

}  // namespace detail

inline Document parse(std::string_view text) {
    Document doc;
    Table* current = &doc.root;
    std::size_t offset = 0;
    int line_no = 0;
    while (offset <= text.size()) {
        std::size_t eol = text.find('\n', offset);
        std::string_view raw = (eol == std::string_view::npos)
                                   ? text.substr(offset)
                                   : text.substr(offset, eol - offset);
        offset = (eol == std::string_view::npos) ? text.size() + 1 : eol + 1;
        ++line_no;

        std::string_view line = detail::trim(raw);
        if (line.empty() || line.front() == '#') continue;

        if (line.front() == '[') {
            bool is_array = line.size() > 1 && line[1] == '[';
            std::size_t close = line.find(is_array ? "]]" : "]");
            if (close == std::string_view::npos) {
                throw ParseError(line_no, "unterminated table header");
            }
            std::string name(
                detail::trim(line.substr(is_array ? 2 : 1, close - (is_array ? 2 : 1))));
            if (name.empty()) throw ParseError(line_no, "empty table name");
            if (is_array) {
                doc.table_arrays[name].emplace_back();
                current = &doc.table_arrays[name].back();
            } else {
                current = &doc.tables[name];
            }
            continue;
        }

        std::size_t pos = 0;
        std::string key = detail::parse_key(line, pos, line_no);
        while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
        if (pos >= line.size() || line[pos] != '=') {
            throw ParseError(line_no, "expected '=' after key '" + key + "'");
        }
        ++pos;
        Value value = detail::parse_value(line, pos, line_no);
        while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
        if (pos < line.size() && line[pos] != '#') {
            throw ParseError(line_no, "trailing characters after value for key '" + key + "'");
        }
        current->values[key] = std::move(value);
    }
    return doc;
}

// Typed accessors. The `where` argument names the table for error messages.

inline const Value& require(const Table& t, const std::string& key, const std::string& where) {
    const Value* v = t.find(key);
    if (v == nullptr) {
        throw std::runtime_error("missing key '" + key + "' in " + where);
    }
    return *v;
}

inline std::int64_t get_int(const Table& t, const std::string& key, const std::string& where) {
    const Value& v = require(t, key, where);
    if (v.type != Value::Type::Integer) {
        throw std::runtime_error("key '" + key + "' in " + where + " must be an integer");
    }
    return v.int_value;
}

inline std::int64_t get_int_or(const Table& t, const std::string& key, std::int64_t fallback) {
    const Value* v = t.find(key);
    if (v == nullptr) return fallback;
    if (v->type != Value::Type::Integer) {
        throw std::runtime_error("key '" + key + "' must be an integer");
    }
    return v->int_value;
}

inline double get_number(const Table& t, const std::string& key, const std::string& where) {
    const Value& v = require(t, key, where);
    if (v.type != Value::Type::Integer && v.type != Value::Type::Float) {
        throw std::runtime_error("key '" + key + "' in " + where + " must be a number");
    }
    return v.as_number();
}

inline double get_number_or(const Table& t, const std::string& key, double fallback) {
    const Value* v = t.find(key);
    if (v == nullptr) return fallback;
    if (v->type != Value::Type::Integer && v->type != Value::Type::Float) {
        throw std::runtime_error("key '" + key + "' must be a number");
    }
    return v->as_number();
}

inline std::string get_string(const Table& t, const std::string& key, const std::string& where) {
    const Value& v = require(t, key, where);
    if (v.type != Value::Type::String) {
        throw std::runtime_error("key '" + key + "' in " + where + " must be a string");
    }
    return v.string_value;
}

inline std::string get_string_or(const Table& t, const std::string& key,
                                 const std::string& fallback) {
    const Value* v = t.find(key);
    if (v == nullptr) return fallback;
    if (v->type != Value::Type::String) {
        throw std::runtime_error("key '" + key + "' must be a string");
    }
    return v->string_value;
}

inline bool get_bool_or(const Table& t, const std::string& key, bool fallback) {
    const Value* v = t.find(key);
    if (v == nullptr) return fallback;
    if (v->type != Value::Type::Boolean) {
        throw std::runtime_error("key '" + key + "' must be a boolean");
    }
    return v->bool_value;
}

inline std::vector<std::string> get_string_array_or(const Table& t, const std::string& key) {
    const Value* v = t.find(key);
    if (v == nullptr) return {};
    if (v->type != Value::Type::Array) {
        throw std::runtime_error("key '" + key + "' must be an array");
    }
    std::vector<std::string> out;
    for (const Value& item : v->array_value) {
        if (item.type != Value::Type::String) {
            throw std::runtime_error("key '" + key + "' must be an array of strings");
        }
        out.push_back(item.string_value);
    }
    return out;
}

}  // namespace orbitmesh::toml
