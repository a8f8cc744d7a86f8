#pragma once

#include <string_view>

namespace gapsort {

/// Observed mean sort times in seconds (1000 trials per cell) for RS sort and
/// quicksort on discrete uniform k=50, Poisson lambda=4 and Binomial(400, 0.5)
/// inputs, n = 100000 .. 2000000. Same schema as an aggregate CSV; the
/// comparison column is empty. Kept byte-identical to data/table1.csv.
inline constexpr std::string_view kTable1Csv = R"csv(algorithm,distribution,n,mean_seconds,mean_comparisons
rs_sort,du,100000,0.203,
rs_sort,du,200000,0.531,
rs_sort,du,300000,0.969,
rs_sort,du,400000,1.500,
rs_sort,du,500000,2.112,
rs_sort,du,600000,2.793,
rs_sort,du,700000,3.500,
rs_sort,du,800000,4.328,
rs_sort,du,900000,5.141,
rs_sort,du,1000000,6.023,
rs_sort,du,1100000,6.953,
rs_sort,du,1200000,7.924,
rs_sort,du,1300000,8.876,
rs_sort,du,1400000,9.878,
rs_sort,du,1500000,10.997,
rs_sort,du,1600000,12.050,
rs_sort,du,1700000,13.290,
rs_sort,du,1800000,14.441,
rs_sort,du,1900000,15.627,
rs_sort,du,2000000,16.871,
rs_sort,poisson,100000,0.187,
rs_sort,poisson,200000,0.515,
rs_sort,poisson,300000,0.937,
rs_sort,poisson,400000,1.508,
rs_sort,poisson,500000,2.161,
rs_sort,poisson,600000,2.915,
rs_sort,poisson,700000,3.619,
rs_sort,poisson,800000,4.619,
rs_sort,poisson,900000,5.301,
rs_sort,poisson,1000000,6.042,
rs_sort,poisson,1100000,7.027,
rs_sort,poisson,1200000,7.975,
rs_sort,poisson,1300000,9.079,
rs_sort,poisson,1400000,10.079,
rs_sort,poisson,1500000,11.108,
rs_sort,poisson,1600000,12.239,
rs_sort,poisson,1700000,13.548,
rs_sort,poisson,1800000,14.774,
rs_sort,poisson,1900000,15.907,
rs_sort,poisson,2000000,17.243,
rs_sort,binomial,100000,0.187,
rs_sort,binomial,200000,0.531,
rs_sort,binomial,300000,1.000,
rs_sort,binomial,400000,1.515,
rs_sort,binomial,500000,2.140,
rs_sort,binomial,600000,2.828,
rs_sort,binomial,700000,3.484,
rs_sort,binomial,800000,4.298,
rs_sort,binomial,900000,5.121,
rs_sort,binomial,1000000,5.984,
rs_sort,binomial,1100000,6.938,
rs_sort,binomial,1200000,7.933,
rs_sort,binomial,1300000,8.876,
rs_sort,binomial,1400000,9.891,
rs_sort,binomial,1500000,10.969,
rs_sort,binomial,1600000,12.047,
rs_sort,binomial,1700000,13.291,
rs_sort,binomial,1800000,14.449,
rs_sort,binomial,1900000,15.835,
rs_sort,binomial,2000000,17.070,
quicksort,du,100000,0.218,
quicksort,du,200000,0.812,
quicksort,du,300000,1.811,
quicksort,du,400000,3.213,
quicksort,du,500000,5.057,
quicksort,du,600000,7.299,
quicksort,du,700000,10.067,
quicksort,du,800000,13.047,
quicksort,du,900000,16.364,
quicksort,du,1000000,20.251,
quicksort,du,1100000,24.564,
quicksort,du,1200000,29.095,
quicksort,du,1300000,34.219,
quicksort,du,1400000,39.496,
quicksort,du,1500000,45.355,
quicksort,du,1600000,51.707,
quicksort,du,1700000,58.335,
quicksort,du,1800000,65.279,
quicksort,du,1900000,72.787,
quicksort,du,2000000,80.403,
quicksort,poisson,100000,1.422,
quicksort,poisson,200000,5.688,
quicksort,poisson,300000,9.883,
quicksort,poisson,400000,14.313,
quicksort,poisson,500000,19.524,
quicksort,poisson,600000,25.139,
quicksort,poisson,700000,30.213,
quicksort,poisson,800000,37.169,
quicksort,poisson,900000,42.130,
quicksort,poisson,1000000,46.929,
quicksort,poisson,1100000,51.142,
quicksort,poisson,1200000,56.521,
quicksort,poisson,1300000,60.998,
quicksort,poisson,1400000,64.321,
quicksort,poisson,1500000,69.032,
quicksort,poisson,1600000,74.328,
quicksort,poisson,1700000,78.431,
quicksort,poisson,1800000,84.320,
quicksort,poisson,1900000,90.001,
quicksort,poisson,2000000,95.113,
quicksort,binomial,100000,0.125,
quicksort,binomial,200000,0.421,
quicksort,binomial,300000,0.938,
quicksort,binomial,400000,1.641,
quicksort,binomial,500000,2.516,
quicksort,binomial,600000,3.657,
quicksort,binomial,700000,5.234,
quicksort,binomial,800000,6.406,
quicksort,binomial,900000,8.110,
quicksort,binomial,1000000,10.016,
quicksort,binomial,1100000,12.095,
quicksort,binomial,1200000,14.438,
quicksort,binomial,1300000,16.986,
quicksort,binomial,1400000,19.579,
quicksort,binomial,1500000,22.501,
quicksort,binomial,1600000,25.693,
quicksort,binomial,1700000,28.485,
quicksort,binomial,1800000,32.563,
quicksort,binomial,1900000,36.222,
quicksort,binomial,2000000,41.012,
)csv";

}  // namespace gapsort
