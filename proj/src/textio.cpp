#include "sympow/textio.hpp"

#include <sstream>

namespace sympow {

std::string format_term_body(const std::string& coeff_str, const std::string& mono_str) {
    if (mono_str == "1") return coeff_str.empty() ? std::string("1") : coeff_str;
    if (coeff_str == "1" || coeff_str.empty()) return mono_str;
    return coeff_str + "*" + mono_str;
}

namespace {

std::vector<std::string> nonblank_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        std::size_t start = line.find_first_not_of(" \t");
        if (start == std::string::npos) continue;
        if (line[start] == '#') continue;
        lines.push_back(line.substr(start));
    }
    return lines;
}

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream in(line);
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

}  // namespace

IdealDocument split_ideal_document(const std::string& text) {
    std::vector<std::string> lines = nonblank_lines(text);
    if (lines.empty()) throw ParseError("empty ideal document");
    std::vector<std::string> head = split_fields(lines.front());
    if (head.size() != 3 || head[0] != "ring")
        throw ParseError("ideal document must start with 'ring <field> <num_vars>'");
    IdealDocument doc;
    doc.field = FieldSpec::parse(head[1]);
    try {
        doc.num_vars = std::stoi(head[2]);
    } catch (const std::exception&) {
        throw ParseError("bad variable count '" + head[2] + "'");
    }
    doc.poly_lines.assign(lines.begin() + 1, lines.end());
    if (doc.poly_lines.empty()) throw EmptyIdeal("ideal document lists no generators");
    return doc;
}

ConfigDocument split_config_document(const std::string& text) {
    ConfigDocument doc;
    for (const std::string& line : nonblank_lines(text)) {
        if (line.rfind("label", 0) == 0 && (line.size() == 5 || line[5] == ' ')) {
            std::vector<std::string> f = split_fields(line);
            if (f.size() != 2) throw ParseError("label record wants exactly one token");
            doc.label = f[1];
        } else if (line.rfind("point ", 0) == 0) {
            std::vector<std::string> f = split_fields(line);
            doc.point_rows.emplace_back(f.begin() + 1, f.end());
            if (doc.point_rows.back().empty()) throw ParseError("point record with no coordinates");
        } else if (line.rfind("line ", 0) == 0) {
            doc.line_forms.push_back(line.substr(5));
        } else {
            throw ParseError("unrecognized configuration record: '" + line + "'");
        }
    }
    if (doc.point_rows.empty()) throw ParseError("configuration lists no points");
    return doc;
}

}  // namespace sympow
