#include "smplab/config.hpp"

#include <cstdio>
#include <cstdlib>
#include <sstream>

namespace smplab::config {

namespace {

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

}  // namespace

bool Node::has(const std::string& key) const { return get(key).has_value(); }

std::optional<std::string> Node::get(const std::string& key) const {
    for (const auto& [k, v] : scalars) {
        if (k == key) return v;
    }
    return std::nullopt;
}

std::string Node::require(const std::string& key) const {
    auto v = get(key);
    if (!v) throw ConfigError("missing key '" + key + "' in block '" + name + "'");
    return *v;
}

double Node::require_double(const std::string& key) const {
    const std::string v = require(key);
    char* end = nullptr;
    const double d = std::strtod(v.c_str(), &end);
    if (end == v.c_str() || *end != '\0')
        throw ConfigError("key '" + key + "' is not a number: '" + v + "'");
    return d;
}

double Node::get_double(const std::string& key, double fallback) const {
    return has(key) ? require_double(key) : fallback;
}

int Node::get_int(const std::string& key, int fallback) const {
    if (!has(key)) return fallback;
    const double d = require_double(key);
    return static_cast<int>(d);
}

std::string Node::get_string(const std::string& key, const std::string& fallback) const {
    auto v = get(key);
    return v ? *v : fallback;
}

const Node* Node::child(const std::string& name_) const {
    for (const auto& c : children) {
        if (c.name == name_) return &c;
    }
    return nullptr;
}

std::vector<const Node*> Node::children_named(const std::string& name_) const {
    std::vector<const Node*> out;
    for (const auto& c : children) {
        if (c.name == name_) out.push_back(&c);
    }
    return out;
}

void Node::set(const std::string& key, const std::string& value) {
    for (auto& [k, v] : scalars) {
        if (k == key) {
            v = value;
            return;
        }
    }
    scalars.emplace_back(key, value);
}

void Node::set_double(const std::string& key, double value) { set(key, format_double(value)); }

void Node::set_int(const std::string& key, long long value) { set(key, std::to_string(value)); }

Node& Node::add_child(const std::string& name_) {
    children.emplace_back();
    children.back().name = name_;
    return children.back();
}

Node parse(const std::string& text) {
    Node root;
    std::vector<Node*> stack{&root};
    std::istringstream in(text);
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = raw;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;

        if (line == "}") {
            if (stack.size() == 1)
                throw ConfigError("line " + std::to_string(line_no) + ": unmatched '}'");
            stack.pop_back();
            continue;
        }
        if (line.size() >= 2 && line.back() == '{') {
            const std::string name = trim(line.substr(0, line.size() - 1));
            if (name.empty() || name.find_first_of("={}") != std::string::npos)
                throw ConfigError("line " + std::to_string(line_no) + ": bad block header");
            stack.push_back(&stack.back()->add_child(name));
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("line " + std::to_string(line_no) +
                              ": expected 'key = value', a block header, or '}'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty()) throw ConfigError("line " + std::to_string(line_no) + ": empty key");
        stack.back()->scalars.emplace_back(key, value);
    }
    if (stack.size() != 1) throw ConfigError("unterminated block at end of input");
    return root;
}

namespace {

void serialize_into(const Node& node, int depth, std::string& out) {
    const std::string pad(static_cast<std::size_t>(depth) * 2, ' ');
    for (const auto& [k, v] : node.scalars) {
        out += pad;
        out += k;
        out += " = ";
        out += v;
        out += '\n';
    }
    for (const auto& c : node.children) {
        out += pad;
        out += c.name;
        out += " {\n";
        serialize_into(c, depth + 1, out);
        out += pad;
        out += "}\n";
    }
}

}  // namespace

std::string serialize(const Node& root) {
    std::string out;
    serialize_into(root, 0, out);
    return out;
}

std::string format_double(double v) {
    // shortest representation that round-trips exactly
    char buf[64];
    for (int prec = 1; prec <= 17; ++prec) {
        std::snprintf(buf, sizeof(buf), "%.*g", prec, v);
        if (std::strtod(buf, nullptr) == v) return buf;
    }
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace smplab::config
