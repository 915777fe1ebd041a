// JSON readers and writers for the file schemas (groupoid.v1, bibundle.v1,
// complex.v1, action.v1, presentation.v1, cocycle.v1) and report.v1
// serialization. File ids are arbitrary integers; loaders keep the id
// tables so diagnostics and outputs can speak the caller's language.

#pragma once

#include <gpd/bibundle.hpp>
#include <gpd/cocycle.hpp>
#include <gpd/groupoid.hpp>
#include <gpd/homotopy.hpp>
#include <gpd/simplicial.hpp>

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace gpd::io {

class ParseError : public std::runtime_error {
public:
  ParseError(std::string const &msg, int line = -1, int column = -1)
      : std::runtime_error(line >= 0 ? msg + " (line " + std::to_string(line) + ", column " +
                                           std::to_string(column) + ")"
                                     : msg),
        line_(line), column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

private:
  int line_, column_;
};

// Resolves a path reference ("groupoid": "other.json") to file contents.
using FileResolver = std::function<std::string(std::string const &)>;

struct LoadedGroupoid {
  FiniteGroupoid groupoid;
  std::vector<long> object_ids;  // dense index -> file id
  std::vector<long> arrow_ids;
  int object_index(long file_id) const;  // throws ParseError when unknown
  int arrow_index(long file_id) const;
};

LoadedGroupoid read_groupoid(std::string const &text);
std::string write_groupoid(FiniteGroupoid const &g);

struct LoadedComplex {
  SimplicialComplex complex;
  std::vector<long> vertex_ids;
  int vertex_index(long file_id) const;
};

LoadedComplex read_complex(std::string const &text);
std::string write_complex(SimplicialComplex const &x);

struct LoadedFunctor {
  LoadedGroupoid source, target;
  GroupoidFunctor functor;
  LoadedFunctor(LoadedGroupoid s, LoadedGroupoid t, GroupoidFunctor f)
      : source(std::move(s)), target(std::move(t)), functor(std::move(f)) {}
};

LoadedFunctor read_functor(std::string const &text, FileResolver const &resolver);

struct LoadedAction {
  ComplexAction action;
  LoadedComplex complex;
  LoadedGroupoid group;  // as a one-object groupoid
};

// action.v1 carries the group and the vertex action; the complex comes from
// an embedded "complex" member, a path, or the explicit argument.
LoadedAction read_action(std::string const &text, FileResolver const &resolver,
                         std::optional<std::string> complex_text = std::nullopt);

struct LoadedBibundle {
  Bibundle bundle;
  LoadedGroupoid left, right;
  std::vector<long> point_ids;
};

LoadedBibundle read_bibundle(std::string const &text, FileResolver const &resolver);
std::string write_bibundle(Bibundle const &b);

GroupPresentation read_presentation(std::string const &text);
std::string write_presentation(GroupPresentation const &p);

struct LoadedCocycle {
  Cocycle cocycle;
  LoadedGroupoid groupoid;
};

LoadedCocycle read_cocycle(std::string const &text, FileResolver const &resolver);
std::string write_cocycle(Cocycle const &c);

// ---- report.v1 -------------------------------------------------------------

std::string groupoid_report_json(std::vector<GroupoidViolation> const &violations);
std::string bibundle_report_json(std::vector<BibundleViolation> const &violations);
std::string cocycle_report_json(std::vector<CocycleViolation> const &violations);
std::string sequence_check_json(SequenceCheck const &check);
std::string morita_json(MoritaDecision const &decision);
std::string principality_json(PrincipalityReport const &report);

}  // namespace gpd::io
