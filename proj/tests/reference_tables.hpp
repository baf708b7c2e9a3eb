// Values as printed in the published tables (x, t, exact, numeric, abs_error).
#pragma once

#include <array>

namespace arps::testdata {

struct PrintedRow {
  double x;
  double t;
  double exact;
  double numeric;
  double abs_error;
};

inline constexpr std::array<PrintedRow, 24> kTable1 = {{
    {0.0, 0.25, -0.0052155, -0.005215, 0.0},
    {2.0, 0.25, -0.271912, -0.271912, 0.0},
    {4.0, 0.25, -1.558058, -1.558058, 0.0},
    {6.0, 0.25, -5.260613, -5.260613, 0.0},
    {8.0, 0.25, -15.401151, -15.401151, 0.0},
    {10.0, 0.25, -42.993929, -42.993929, 0.0},
    {0.0, 0.5, -0.020942, -0.020942, 1.491862e-16},
    {2.0, 0.5, -0.196456, -0.196456, 2.77555800e-16},
    {4.0, 0.5, -1.309459, -1.309459, 6.6613379e-16},
    {6.0, 0.5, -4.568853, -4.568853, 1.776357e-15},
    {8.0, 0.5, -13.514867, -13.514867, 5.329071e-15},
    {10.0, 0.5, -37.864312, -37.864312, 7.10542700e-15},
    {0.0, 0.75, -0.047427, -0.047427, 0.0},
    {2.0, 0.75, -0.1345027, -0.1345027, 2.775558e-17},
    {4.0, 0.75, -1.091777, -1.091777, 0.0},
    {6.0, 0.75, -3.959005, -3.959005, 4.440892e-16},
    {8.0, 0.75, -11.8504575, -11.8504575, 0.0},
    {10.0, 0.75, -33.337526, -33.337526, 7.10542700e-15},
    {0.0, 1.0, -0.085084, -0.085084, 4.02455799e-16},
    {2.0, 1.0, -0.085084, -0.085084, 7.3552280e-16},
    {4.0, 1.0, -0.9016064, -0.9016064, 1.776357e-15},
    {6.0, 1.0, -3.4215264, -3.4215264, 4.440892e-15},
    {8.0, 1.0, -10.3818834, -10.3818834, 1.06581400e-14},
    {10.0, 1.0, -29.342747, -29.342747, 2.842171e-14},
}};

inline constexpr std::array<PrintedRow, 24> kTable2 = {{
    {0.0, 0.25, -0.382878, -0.382878, 2.220446e-16},
    {2.0, 0.25, -4.057229, -4.057229, 1.776357e-15},
    {4.0, 0.25, -46.718475, -46.718474, 1.42108499e-14},
    {6.0, 0.25, -364.044029, -364.044029, 1.136868e-13},
    {8.0, 0.25, -2709.064452, -2709.064451, 9.094947e-13},
    {10.0, 0.25, -20036.590357, -20036.590357, 1.091393e-11},
    {0.0, 0.5, -1.629242, -1.629242, 2.220446e-16},
    {2.0, 0.5, -1.629242, -1.6292422, 4.440892e-16},
    {4.0, 0.5, -27.202986, -27.202986, 2.842171e-14},
    {6.0, 0.5, -219.629846, -219.629846, 1.705303e-13},
    {8.0, 0.5, -1641.951105, -1641.951105, 1.818989e-12},
    {10.0, 0.5, -12151.626076, -12151.626076, 1.09139399e-11},
    {0.0, 0.75, -4.057229, -4.057229, 1.77636e-15},
    {2.0, 0.75, -0.382878, -0.382878, 2.88658e-15},
    {4.0, 0.75, -15.396869, -15.396868, 7.10542700e-15},
    {6.0, 0.75, -132.042368, -132.04236, 1.98952e-13},
    {8.0, 0.75, -994.714705, -994.714705, 2.046363e-12},
    {10.0, 0.75, -7369.153566, -7369.153566, 1.909939e-11},
    {0.0, 1.0, -8.286587, -8.286587, 1.776357e-15},
    {2.0, 1.0, 0.0, -5.329071e-15, 5.329071e-15},
    {4.0, 1.0, -8.286587, -8.286587, 7.10542700e-15},
    {6.0, 1.0, -78.924699, -78.924699, 3.5527137e-13},
    {8.0, 1.0, -602.146908, -602.146908, 4.5474740e-13},
    {10.0, 1.0, -4468.4374838, -4468.437484, 1.4551915e-11},
}};

inline constexpr std::array<PrintedRow, 24> kTable3 = {{
    {0.0, 0.25, 0.005867, 0.005867, 2.08166800e-17},
    {2.0, 0.25, 1.752815, 1.752815, 2.220446e-16},
    {4.0, 0.25, 17.326295, 17.326295, 0.0},
    {6.0, 0.25, 132.760301, 132.760301, 2.842171e-14},
    {8.0, 0.25, 985.757464, 985.757464, 0.0},
    {10.0, 0.25, 7288.607959, 7288.607959, 9.094947e-13},
    {0.0, 0.5, 0.02356, 0.02356, 1.769418e-16},
    {2.0, 0.5, 1.473141, 1.473141, 6.6613379e-16},
    {4.0, 0.5, 15.204225, 15.204225, 5.329071e-15},
    {6.0, 0.5, 117.072691, 117.072691, 7.105427e-14},
    {8.0, 0.5, 869.839817, 869.839817, 2.27373700e-13},
    {10.0, 0.5, 6432.085825, 6432.085825, 1.818989e-12},
    {0.0, 0.75, 0.053355, 0.053355, 2.775558e-17},
    {2.0, 0.75, 1.228249, 1.228249, 0.0},
    {4.0, 0.75, 13.3317646, 13.331765, 3.552714e-15},
    {6.0, 0.75, 103.228459, 103.228459, 0.0},
    {8.0, 0.75, 767.542857, 767.542857, 2.27373700e-13},
    {10.0, 0.75, 5676.207696, 5676.207696, 0.0},
    {0.0, 1.0, 0.095719, 0.095719, 5.55111500e-17},
    {2.0, 1.0, 1.014307, 1.014307, 4.440892e-16},
    {4.0, 1.0, 11.679619, 11.679619, 3.552714e-15},
    {6.0, 1.0, 91.011007, 91.011007, 2.842171e-14},
    {8.0, 1.0, 677.266113, 677.266113, 2.27373700e-13},
    {10.0, 1.0, 5009.147589, 5009.147589, 2.728484e-12},
}};

inline constexpr std::array<PrintedRow, 24> kTable4 = {{
    {0.0, 0.25, 0.031413, 0.031413, 1.387779e-17},
    {2.0, 0.25, 1.964188, 1.964188, 2.220446e-16},
    {4.0, 0.25, 20.2723, 20.2723, 0.0},
    {6.0, 0.25, 156.096922, 156.096922, 2.842171e-14},
    {8.0, 0.25, 1159.786423, 1159.786423, 2.27373700e-13},
    {10.0, 0.25, 8576.114434, 8576.114434, 1.818989e-12},
    {0.0, 0.5, 0.127626, 0.127626, 7.4940049e-16},
    {2.0, 0.5, 1.35241, 1.35241, 2.88658e-15},
    {4.0, 0.5, 15.572825, 15.572825, 2.13162800e-14},
    {6.0, 0.5, 121.34801, 121.34801, 1.563194e-13},
    {8.0, 0.5, 903.021484, 903.021484, 1.136868e-12},
    {10.0, 0.5, 6678.863452, 6678.863452, 1.000444e-11},
    {0.0, 0.75, 0.294683, 0.294683, 2.04836099e-13},
    {2.0, 0.75, 0.888424, 0.888424, 7.329692e-13},
    {4.0, 0.75, 11.914557, 11.914557, 5.307754e-12},
    {6.0, 0.75, 94.285758, 94.285758, 3.923617e-11},
    {8.0, 0.75, 703.052779, 703.052779, 2.89901400e-10},
    {10.0, 0.75, 5201.282906, 5201.282906, 2.14277e-09},
    {0.0, 1.0, 0.543081, 0.543081, 1.151879e-11},
    {2.0, 1.0, 0.543081, 0.543081, 4.055167e-11},
    {4.0, 1.0, 9.067662, 9.067662, 2.936122e-10},
    {6.0, 1.0, 73.209949, 73.209949, 2.168719e-09},
    {8.0, 1.0, 547.317035, 547.317035, 1.602473e-08},
    {10.0, 1.0, 4050.542025, 4050.542025, 1.18403499e-07},
}};

inline constexpr std::array<PrintedRow, 24> kTable5 = {{
    {0.0, 0.25, -0.10218, -0.10218, 6.782491e-12},
    {2.0, 0.25, 0.755647, 0.755647, 8.2958079e-12},
    {4.0, 0.25, 1.961942, 1.961942, 1.36346499e-11},
    {6.0, 0.25, 4.072989, 4.072989, 2.52615699e-11},
    {8.0, 0.25, 8.0623, 8.0623, 4.85389499e-11},
    {10.0, 0.25, 15.769549, 15.769549, 9.419843e-11},
    {0.0, 0.5, -0.20507, -0.20507, 8.684082e-10},
    {2.0, 0.5, 0.638209, 0.638209, 1.05566800e-09},
    {4.0, 0.5, 1.7758, 1.7758, 1.729751e-09},
    {6.0, 0.5, 3.732301, 3.732301, 3.20150900e-09},
    {8.0, 0.5, 7.409957, 7.409957, 6.14964700e-09},
    {10.0, 0.5, 14.504724, 14.504724, 1.193371e-08},
    {0.0, 0.75, -0.309386, -0.309386, 1.484473e-08},
    {2.0, 0.75, 0.525205, 0.525205, 1.793493e-08},
    {4.0, 0.75, 1.601995, 1.601995, 2.92958400e-08},
    {6.0, 0.75, 3.417546, 3.417546, 5.416657e-08},
    {8.0, 0.75, 6.809102, 6.809102, 1.04016299e-07},
    {10.0, 0.75, 13.340684, 13.340684, 2.018332e-07},
    {0.0, 1.0, -0.415851, -0.415851, 1.112851e-07},
    {2.0, 1.0, 0.415851, 0.415851, 1.336203e-07},
    {4.0, 1.0, 1.439322, 1.439322, 2.17574699e-07},
    {6.0, 1.0, 3.126538, 3.126538, 4.018639e-07},
    {8.0, 1.0, 6.25556, 6.25556, 7.7147309e-07},
    {10.0, 1.0, 12.269341, 12.269341, 1.49684799e-06},
}};

}  // namespace arps::testdata
