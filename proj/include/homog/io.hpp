#pragma once

#include "homog/family.hpp"
#include "homog/graph.hpp"
#include "homog/language.hpp"
#include "homog/monic.hpp"

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace homog {

/// Line and column are 1-based; line 0 means the file as a whole.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, int line, int column);
    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

std::string read_file(const std::string& path);

/// `parts M` followed by one `colours I J : tok ...` line per pair.
Language parse_language(std::string_view text);
std::string serialize_language(const Language& lang);

/// One "[J; t1 ... tK]" monic; `line` is used for error positions.
Monic parse_monic(std::string_view text, const Language& lang, int line = 1, int column_offset = 0);

struct FamilyFile {
    std::vector<Monic> members;
    std::vector<std::string> labels;  // parallel to members, empty if unlabelled
};

/// One monic per line with an optional `NAME:` prefix; '#' starts a comment.
FamilyFile parse_family_file(std::string_view text, const Language& lang);
Family parse_family(std::string_view text, const Language& lang);
std::string serialize_family(const Family& f);

/// `graph M N`, then `v ID PART` lines and `e ID1 ID2 TOK` lines.
Graph parse_graph(std::string_view text, const Language& lang);
std::string serialize_graph(const Graph& g, const Language& lang);

}  // namespace homog
