#ifndef GRPD_IO_HPP
#define GRPD_IO_HPP

#include <functional>
#include <string>
#include <vector>

#include "grpd/br.hpp"
#include "grpd/groupoid.hpp"
#include "grpd/kpar.hpp"

namespace grpd {

/// Canonical interchange form: a JSON object with keys `objects`, `arrows`
/// (array of {name, dom, ran, inv}), `identity` (object -> arrow index) and
/// `comp` (sorted [g, h, gh] triples, exactly the defined pairs). A
/// `br_labels` key is tolerated so expansion output stays re-parseable;
/// any other key is rejected.
std::string serialize_groupoid(const FiniteGroupoid& g);

/// Structural parse only: throws ParseError on syntax errors (with byte
/// position), missing/unknown keys or dangling indices, but does not check
/// the groupoid axioms.
FiniteGroupoid parse_groupoid_raw(const std::string& text);

/// parse_groupoid_raw plus validate(); axiom violations are ParseErrors.
FiniteGroupoid parse_groupoid(const std::string& text);

/// The expansion in the interchange form plus `br_labels`, one entry per
/// expansion arrow: {arrow: base arrow name, carrier: [base arrow names]}.
std::string serialize_br(const BRGroupoid& brg, const FiniteGroupoid& origin);

std::string validation_report_json(const ValidationReport& report);

std::string certificate_json(const IsoCertificate& cert);

/// A partial-representation file, with image entries kept as exact literal
/// strings so that the scalar field can be chosen afterwards.
struct RepFileData {
  FiniteGroupoid groupoid;
  std::size_t dim = 0;
  std::string field_spec;
  std::vector<std::vector<std::string>> entries;  // per arrow, row-major, dim*dim each
};

/// Parses {"groupoid": <inline object or reference string>, "dim", "field",
/// "images"}. A reference string is resolved through load_ref; without a
/// loader, references are an error.
RepFileData parse_rep_file(
    const std::string& text,
    const std::function<std::string(const std::string&)>& load_ref = {});

/// Structure-constant table with printable labels, ready for emission.
struct IsoTableData {
  std::string field_spec;
  std::size_t dimension = 0;
  std::vector<std::string> labels;    // basis labels (monomials when complete)
  std::vector<std::string> elements;  // basis element text forms
  struct Entry {
    std::size_t i, j, k;
    std::string coeff;
  };
  std::vector<Entry> entries;  // nonzero constants only, (i, j, k) ascending
};

std::string iso_table_json(const IsoTableData& table);

}  // namespace grpd

#endif
