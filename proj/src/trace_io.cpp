#include "hypermon/trace_io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "hypermon/error.hpp"

namespace hypermon {

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool blank(char c) { return c == ' ' || c == '\t' || c == '\r'; }

Step parse_step(std::string_view line, std::size_t lineno) {
    Step s;
    std::size_t i = 0;
    auto skip = [&] {
        while (i < line.size() && blank(line[i])) {
            ++i;
        }
    };
    skip();
    if (line.substr(i, 2) == "{}") {
        i += 2;
        skip();
        if (i != line.size()) {
            throw ParseError("unexpected text after '{}'", lineno, i + 1);
        }
        return s;
    }
    while (true) {
        skip();
        if (i == line.size() || !ident_start(line[i])) {
            throw ParseError("expected a proposition name", lineno, i + 1);
        }
        const std::size_t start = i;
        while (i < line.size() && ident_char(line[i])) {
            ++i;
        }
        s.emplace(line.substr(start, i - start));
        skip();
        if (i == line.size()) {
            return s;
        }
        if (line[i] != ',') {
            throw ParseError("expected ',' between propositions", lineno, i + 1);
        }
        ++i;
    }
}

}  // namespace

Trace parse_trace(std::string_view text, std::string name) {
    Trace t{std::move(name), {}};
    std::size_t lineno = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        ++lineno;
        std::string_view line = text.substr(pos, end - pos);
        if (auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        if (!std::all_of(line.begin(), line.end(), blank)) {
            t.steps.push_back(parse_step(line, lineno));
        }
        pos = end + 1;
    }
    return t;
}

std::string print_trace(const Trace& t) {
    std::string out;
    for (const auto& s : t.steps) {
        if (s.empty()) {
            out += "{}";
        }
        bool first = true;
        for (const auto& p : s) {
            out += first ? "" : ",";
            out += p;
            first = false;
        }
        out += '\n';
    }
    return out;
}

Trace read_trace_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error("cannot read trace file " + path.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_trace(buf.str(), path.stem().string());
}

void write_trace_file(const std::filesystem::path& path, const Trace& t) {
    std::ofstream out(path, std::ios::binary);
    out << print_trace(t);
    if (!out) {
        throw Error("cannot write trace file " + path.string());
    }
}

std::vector<std::filesystem::path> expand_trace_paths(const std::vector<std::filesystem::path>& paths) {
    std::vector<std::filesystem::path> out;
    for (const auto& p : paths) {
        if (std::filesystem::is_directory(p)) {
            std::vector<std::filesystem::path> found;
            for (const auto& e : std::filesystem::directory_iterator(p)) {
                if (e.is_regular_file() && e.path().extension() == ".trace") {
                    found.push_back(e.path());
                }
            }
            std::sort(found.begin(), found.end(),
                      [](const auto& a, const auto& b) { return a.filename().string() < b.filename().string(); });
            out.insert(out.end(), found.begin(), found.end());
        } else if (std::filesystem::exists(p)) {
            out.push_back(p);
        } else {
            throw Error("no such trace file or directory: " + p.string());
        }
    }
    return out;
}

}  // namespace hypermon
