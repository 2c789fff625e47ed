#ifndef PFFC_CSV_HPP_
#define PFFC_CSV_HPP_

#include <iosfwd>
#include <string>

#include "pffc/solver.hpp"

namespace pffc {

// Writes the trajectory as CSV with the fixed header
//   t,obj_avg,violation_l2,q_norm,w_norm,lmo_gap,wall_ms
// (LF line endings; lmo_gap cells are empty when unmeasured).
void write_report_csv(const RunReport& report, std::ostream& out);
void write_report_csv(const RunReport& report, const std::string& path);

}  // namespace pffc

#endif  // PFFC_CSV_HPP_
