#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "smplab/errors.hpp"

namespace smplab::config {

class ConfigError : public Error {
public:
    using Error::Error;
};

/// Ordered key/value tree for the line-oriented problem format:
///
///   # comment
///   key = value
///   block {
///     key = value
///   }
///
/// Repeated child names express lists (e.g. `piece { ... }` blocks). Values
/// keep their verbatim text; typed accessors parse on demand.
struct Node {
    std::string name;
    std::vector<std::pair<std::string, std::string>> scalars;
    std::vector<Node> children;

    bool has(const std::string& key) const;
    std::optional<std::string> get(const std::string& key) const;
    std::string require(const std::string& key) const;
    double require_double(const std::string& key) const;
    double get_double(const std::string& key, double fallback) const;
    int get_int(const std::string& key, int fallback) const;
    std::string get_string(const std::string& key, const std::string& fallback) const;

    const Node* child(const std::string& name) const;
    std::vector<const Node*> children_named(const std::string& name) const;

    void set(const std::string& key, const std::string& value);
    void set_double(const std::string& key, double value);
    void set_int(const std::string& key, long long value);
    Node& add_child(const std::string& name);
};

/// Parses the whole document into an unnamed root node.
Node parse(const std::string& text);

/// Round-trip stable serialization (two-space indentation, declaration order).
std::string serialize(const Node& root);

/// Canonical shortest-exact formatting of a double (deterministic output).
std::string format_double(double v);

}  // namespace smplab::config
