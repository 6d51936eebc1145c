#ifndef HYPERMATCH_IO_HPP
#define HYPERMATCH_IO_HPP

#include "hypermatch/aux_graph.hpp"
#include "hypermatch/family.hpp"
#include "hypermatch/kgraph.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace hypermatch {

/// File formats, bit-exact:
///   khg 1 <k> <n>        one edge per line, k increasing integers
///   khf 1 <k> <n> <m>    per member: "F <i> <count>" then count edge lines
///   kha 1 <k> <n> <m> <r>  edges carry one v<i>/u<j> token each
/// '#' starts a comment line; blank lines are ignored.

KGraph parse_kgraph(std::istream& in);
Family parse_family(std::istream& in);
AuxGraph parse_aux(std::istream& in);

std::string emit_kgraph(const KGraph& g);
std::string emit_family(const Family& f);
std::string emit_aux(const AuxGraph& a);

KGraph load_kgraph(const std::string& path);
Family load_family(const std::string& path);
AuxGraph load_aux(const std::string& path);
void save_text(const std::string& path, const std::string& content);

/// Ordered key=value record list; renders as lines or as one JSON document
/// with identical keys.
class Report {
public:
    void add(const std::string& key, const std::string& value);
    void add(const std::string& key, long long value);
    std::string render_kv() const;
    std::string render_json() const;

private:
    std::vector<std::pair<std::string, std::string>> entries_;
};

}  // namespace hypermatch

#endif  // HYPERMATCH_IO_HPP
