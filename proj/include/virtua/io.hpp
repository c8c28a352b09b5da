#pragma once

#include <string>
#include <utility>
#include <vector>

#include "virtua/fitting.hpp"
#include "virtua/virtuality.hpp"

namespace virtua {

// canonical polynomial string, e.g. "x0*y1+10*x0*y2-x1*y0"; round trips
// byte-identically through parse_poly
std::string print_poly(const CoxRing& ring, const Poly& f);
Poly parse_poly(const CoxRing& ring, const std::string& text);

// "1,1" -> (1,1)
Multidegree parse_degree(const std::string& text, int rank);

RingPtr ring_from_json_text(const std::string& text);
RingPtr ring_from_json_file(const std::string& path);

// newline-separated polynomial strings; '#' starts a comment
Ideal ideal_from_file(const RingPtr& ring, const std::string& path);
Ideal ideal_from_lines(const RingPtr& ring, const std::vector<std::string>& lines);

// complex JSON: {"ring": ..., "modules": [{"twists": [[..]]}, ...],
//                "maps": [[["poly", ...], ...], ...]} with maps[i] the matrix
// of phi_{i+1} in row-major polynomial strings. The embedded ring is optional
// when one is supplied.
FreeComplex complex_from_json_text(const std::string& text, RingPtr ring = nullptr);
FreeComplex complex_from_json_file(const std::string& path, RingPtr ring = nullptr);
std::string complex_to_json_text(const FreeComplex& F);

// presentation JSON: {"ring": ..., "target": [[..]], "source": [[..]],
//                     "matrix": [["poly", ...], ...]}
Presentation presentation_from_json_text(const std::string& text, RingPtr ring = nullptr);
Presentation presentation_from_json_file(const std::string& path, RingPtr ring = nullptr);

std::string ring_to_json_text(const CoxRing& ring);

// report serialization (schema virtua/1)
std::string check_report_to_json(const VirtualityReport& report,
                                 const std::vector<TorsionCertificate>* certs);
std::string check_report_to_text(const VirtualityReport& report,
                                 const std::vector<TorsionCertificate>* certs);

std::vector<std::string> ideal_strings(const Ideal& I);  // reduced GB, canonical

}  // namespace virtua
