#pragma once

#include <iosfwd>
#include <string>

#include "schubert/ring.hpp"

namespace schubert {

/// One structure constant as exchanged with the CLI table/coeff output.
struct TableRecord {
  std::string space;
  Partition lambda;
  Partition mu;
  Partition nu;
  long long coeff = 0;
};

/// Canonical single-line JSON with alphabetical keys:
/// {"coeff":1,"lambda":[2,1],"mu":[1],"nu":[2,2],"space":"A:k=2,m=2"}
std::string to_record_line(const TableRecord& record);
TableRecord parse_record_line(const std::string& line);

/// Streams every nonzero structure constant of the space, lambda and mu in
/// basis order, nu in term order. Deterministic and byte-stable.
void write_table(const SchubertRing& ring, std::ostream& out);

}  // namespace schubert
