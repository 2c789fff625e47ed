#include "pffc/csv.hpp"

#include <cmath>
#include <fstream>
#include <ostream>

#include "pffc/errors.hpp"

namespace pffc {

void write_report_csv(const RunReport& report, std::ostream& out) {
  out << "t,obj_avg,violation_l2,q_norm,w_norm,lmo_gap,wall_ms\n";
  char buf[256];
  for (const auto& row : report.rows) {
    char gap[32] = "";
    if (!std::isnan(row.lmo_gap)) {
      std::snprintf(gap, sizeof gap, "%.12g", row.lmo_gap);
    }
    std::snprintf(buf, sizeof buf, "%d,%.12g,%.12g,%.12g,%.12g,%s,%.3f\n",
                  row.t, row.obj_avg, row.violation_l2, row.q_norm,
                  row.w_norm, gap, row.wall_ms);
    out << buf;
  }
}

void write_report_csv(const RunReport& report, const std::string& path) {
  std::ofstream out(path, std::ios::binary);  // keep LF endings everywhere
  if (!out) throw SolverError("cannot open output file: " + path);
  write_report_csv(report, out);
}

}  // namespace pffc
