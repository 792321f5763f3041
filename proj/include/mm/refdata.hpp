// Reference tables the verification suite checks against: the classified
// CM points, the measure/L-value identity list, and the regulator case
// dossiers. Values are stored exactly as published (5 significant digits
// for the lambda column).

#ifndef MM_REFDATA_HPP
#define MM_REFDATA_HPP

#include <vector>

#include "mm/quadforms.hpp"

namespace mm {

struct CMTableRow {
    QuadForm form;        // form of tau_0
    long h2;              // h(D_{2 tau_0})
    long h_product;       // h(D_{tau_0}) h(D_{4 tau_0})
    double lambda_re;     // lambda(2 tau_0) to 5 significant digits
    double lambda_im;
};

// 47 rows; the first 35 have h(D_{2 tau_0}) = 1 and correspond in order
// to the measure/L-value identity list.
const std::vector<CMTableRow>& cm_table();

// Discriminants with class number 1 (13 values) and 2 (29 values).
const std::vector<long>& class_number_one_discs();
const std::vector<long>& class_number_two_discs();

}  // namespace mm

#endif
