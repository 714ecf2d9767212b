#pragma once

#include <optional>
#include <string>
#include <vector>

#include "knotcomm/knot.hpp"

namespace knotcomm {

/* A catalog is a named collection of knot descriptions loaded from a JSON
   file (or compiled in as the builtin set).  The JSON layout is

     {
       "version": 1,
       "knots": [
         {
           "name": "trefoil",
           "seifert": [[-1, 1], [0, -1]],
           "alexander": [1, -1, 1],
           "signature": -2,
           "signature_jumps": [{"turn": "1/6", "value": -2}],
           "mirror": false,
           "genus": 1,
           "fibered": true,
           "comment": "..."
         }
       ]
     }

   Every field except "name" is optional.  Alexander coefficients are listed
   constant term first.  Jump turns are strings, either an exact fraction
   "p/q" or a decimal "0.088..."; the decimal form is matched against
   computed jump locations with a tolerance of half an ulp (plus a little
   slack) in the last given digit, while the fraction form must match
   exactly.  "mirror": true means the record describes the mirror image of
   the knot the other fields describe.

   Loading performs structural validation only (shapes, types, parsable
   turns, unique nonempty names) and rejects the whole file on the first
   problem, reporting the JSON line when the text itself is malformed.
   Mathematical validation (Seifert shape, reciprocity, declared data
   consistency) happens when a record is instantiated. */

class Catalog {
public:
  /* The compiled-in catalog of well-known knots. */
  static Catalog builtin();

  /* Parses catalog text; origin names the source in error messages. */
  static Catalog parse(const std::string& text,
                       const std::string& origin = "<string>");

  /* Loads a catalog file. */
  static Catalog load(const std::string& path);

  /* Resolution order: explicit path if given, else the KNOTCOMM_CATALOG
     environment variable if set and nonempty, else the builtin catalog. */
  static Catalog resolve(const std::optional<std::string>& path);

  const std::vector<KnotData>& knots() const { return knots_; }
  std::vector<std::string> names() const;
  const KnotData* find(const std::string& name) const;

  /* Instantiates (and thereby fully validates) a named knot.  Throws
     UnknownKnot when the name is absent. */
  KnotRecord record(const std::string& name, const CertifyOptions& opts = {}) const;

  /* Appends a knot description; duplicate names are rejected. */
  void add(KnotData k);

  /* Serializes the catalog; parse(to_json()) reproduces the same catalog,
     including the verbatim spelling of jump turns. */
  std::string to_json() const;
  void save(const std::string& path) const;

private:
  std::vector<KnotData> knots_;
};

/* Parses a turn string ("p/q" or a positive decimal) together with the jump
   value into a declared jump, preserving the original spelling.  Throws
   CatalogError on anything unparsable. */
DeclaredJump parse_jump(const std::string& turn, int value);

}  // namespace knotcomm
