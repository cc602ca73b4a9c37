#include "kgbem/special_functions.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace kgbem {

namespace {

constexpr long double kGammaL = 0.577215664901532860606512090082402431L;
constexpr long double kPiL = 3.141592653589793238462643383279502884L;
constexpr long double kEpsL = 1e-19L;

[[noreturn]] void domain_failure(const char* fn, double z) {
    throw std::domain_error(std::string(fn) + ": argument " + std::to_string(z) +
                            " outside the function domain");
}

void require_nonnegative(const char* fn, double z) {
    if (!(z >= 0.0) || !std::isfinite(z)) domain_failure(fn, z);
}

void require_positive(const char* fn, double z) {
    if (!(z > 0.0) || !std::isfinite(z)) domain_failure(fn, z);
}

// Ascending series I0(z) = sum_k (z^2/4)^k / (k!)^2.  All terms positive, so
// the sum is accurate for any z; used below the asymptotic crossover.
long double i0_series(long double z) {
    const long double q = z * z / 4.0L;
    long double term = 1.0L;
    long double sum = 1.0L;
    for (int k = 1; k < 400; ++k) {
        term *= q / (static_cast<long double>(k) * k);
        sum += term;
        if (term < sum * kEpsL) break;
    }
    return sum;
}

// I1(z) = (z/2) sum_k (z^2/4)^k / (k! (k+1)!).
long double i1_series(long double z) {
    const long double q = z * z / 4.0L;
    long double term = z / 2.0L;
    long double sum = term;
    for (int k = 1; k < 400; ++k) {
        term *= q / (static_cast<long double>(k) * (k + 1));
        sum += term;
        if (term < sum * kEpsL) break;
    }
    return sum;
}

// Hankel expansion tail sum_k c_k with c_0 = 1 and
// c_{k+1} = c_k * sign * (4 nu^2 - (2k+1)^2) / (8 z (k+1)); sign = +1 gives
// the K series, sign = -1 the I series.  Truncated at the smallest term.
long double hankel_sum(int nu, long double z, int sign) {
    const long double mu = 4.0L * nu * nu;
    long double term = 1.0L;
    long double sum = 1.0L;
    long double prev = 1.0L;
    for (int k = 1; k < 100; ++k) {
        const long double odd = 2.0L * k - 1.0L;
        term *= sign * (mu - odd * odd) / (8.0L * z * k);
        if (std::fabs(term) >= prev) break;
        sum += term;
        prev = std::fabs(term);
        if (prev < kEpsL * std::fabs(sum)) break;
    }
    return sum;
}

// sigma0(z) = sum_k (h_k - gamma) (z^2/4)^k / (k!)^2, h_0 = 0.
long double sigma0_series(long double z) {
    const long double q = z * z / 4.0L;
    long double pk = 1.0L;
    long double h = 0.0L;
    long double sum = -kGammaL;
    for (int k = 1; k < 400; ++k) {
        pk *= q / (static_cast<long double>(k) * k);
        h += 1.0L / k;
        const long double term = (h - kGammaL) * pk;
        sum += term;
        if (std::fabs(term) < std::fabs(sum) * kEpsL) break;
    }
    return sum;
}

// sigma1(z) = -(z/4) sum_k (h_k + h_{k+1} - 2 gamma) (z^2/4)^k / (k! (k+1)!).
long double sigma1_series(long double z) {
    const long double q = z * z / 4.0L;
    long double pk = 1.0L;
    long double hk = 0.0L;
    long double hk1 = 1.0L;
    long double sum = hk + hk1 - 2.0L * kGammaL;
    for (int k = 1; k < 400; ++k) {
        pk *= q / (static_cast<long double>(k) * (k + 1));
        hk += 1.0L / k;
        hk1 += 1.0L / (k + 1);
        const long double term = (hk + hk1 - 2.0L * kGammaL) * pk;
        sum += term;
        if (std::fabs(term) < std::fabs(sum) * kEpsL) break;
    }
    return -(z / 4.0L) * sum;
}

// Chebyshev series for the exponentially scaled midrange of K0 and K1,
// from the public domain SLATEC FNLIB data (DBSK0E / DBSK1E).

// sqrt(x) e^x K0(x) - 1.25 on 2 <= x <= 8, argument (16/x - 5)/3.
constexpr double kAk0[38] = {
    -0.07643947903327941424082978270088,
    -0.02235652605699819052023095550791,
    7.734181154693858235300618174047e-4,
    -4.281006688886099464452146435416e-5,
    3.08170017386297474365001482666e-6,
    -2.639367222009664974067448892723e-7,
    2.563713036403469206294088265742e-8,
    -2.742705549900201263857211915244e-9,
    3.169429658097499592080832873403e-10,
    -3.902353286962184141601065717962e-11,
    5.068040698188575402050092127286e-12,
    -6.889574741007870679541713557984e-13,
    9.744978497825917691388201336831e-14,
    -1.427332841884548505389855340122e-14,
    2.156412571021463039558062976527e-15,
    -3.34965425514956277218878205853e-16,
    5.335260216952911692145280392601e-17,
    -8.693669980890753807639622378837e-18,
    1.446404347862212227887763442346e-18,
    -2.452889825500129682404678751573e-19,
    4.2337545262321715728217063424e-20,
    -7.427946526454464195695341294933e-21,
    1.3231505293926668662779674624e-21,
    -2.390587164739649451335981465599e-22,
    4.376827585923226140165712554666e-23,
    -8.113700607345118059339011413333e-24,
    1.521819913832172958310378154666e-24,
    -2.886041941483397770235958613333e-25,
    5.530620667054717979992610133333e-26,
    -1.070377329249898728591633066666e-26,
    2.091086893142384300296328533333e-27,
    -4.121713723646203827410261333333e-28,
    8.19348397112130764013568e-29,
    -1.642000275459297726780757333333e-29,
    3.316143281480227195890346666666e-30,
    -6.746863644145295941085866666666e-31,
    1.382429146318424677635413333333e-31,
    -2.851874167359832570811733333333e-32,
};

// sqrt(x) e^x K0(x) - 1.25 on x >= 8, argument 16/x - 1.
constexpr double kAk02[33] = {
    -0.01201869826307592239839346212452,
    -0.009174852691025695310652561075713,
    1.444550931775005821048843878057e-4,
    -4.013614175435709728671021077879e-6,
    1.567831810852310672590348990333e-7,
    -7.77011043852173771031579975446e-9,
    4.611182576179717882533130529586e-10,
    -3.158592997860565770526665803309e-11,
    2.435018039365041127835887814329e-12,
    -2.074331387398347897709853373506e-13,
    1.925787280589917084742736504693e-14,
    -1.927554805838956103600347182218e-15,
    2.062198029197818278285237869644e-16,
    -2.341685117579242402603640195071e-17,
    2.805902810643042246815178828458e-18,
    -3.530507631161807945815482463573e-19,
    4.645295422935108267424216337066e-20,
    -6.368625941344266473922053461333e-21,
    9.0695213109865155676223488e-22,
    -1.337974785423690739845005311999e-22,
    2.03983602185995231552208896e-23,
    -3.207027481367840500060869973333e-24,
    5.189744413662309963626359466666e-25,
    -8.629501497540572192964607999999e-26,
    1.4721611831025598552080384e-26,
    -2.573069023867011283812351999999e-27,
    4.60177408664351658737664e-28,
    -8.411555324201093737130666666666e-29,
    1.569806306635368939301546666666e-29,
    -2.988226453005757788979199999999e-30,
    5.796831375216836520618666666666e-31,
    -1.145035994347681332155733333333e-31,
    2.301266594249682802005333333333e-32,
};

// sqrt(x) e^x K1(x) - 1.25 on 2 <= x <= 8, argument (16/x - 5)/3.
constexpr double kAk1[38] = {
    0.27443134069738829695257666227266,
    0.07571989953199367817089237814929,
    -0.0014410515564754061229853116175625,
    6.6501169551257479394251385477036e-5,
    -4.3699847095201407660580845089167e-6,
    3.5402774997630526799417139008534e-7,
    -3.3111637792932920208982688245704e-8,
    3.4459775819010534532311499770992e-9,
    -3.8989323474754271048981937492758e-10,
    4.7208197504658356400947449339005e-11,
    -6.047835662875356234537359156289e-12,
    8.1284948748658747888193837985663e-13,
    -1.1386945747147891428923915951042e-13,
    1.654035840846228232597294820509e-14,
    -2.4809025677068848221516010440533e-15,
    3.8292378907024096948429227299157e-16,
    -6.0647341040012418187768210377386e-17,
    9.8324256232648616038194004650666e-18,
    -1.6284168738284380035666620115626e-18,
    2.7501536496752623718284120337066e-19,
    -4.7289666463953250924281069568e-20,
    8.2681500028109932722392050346666e-21,
    -1.4681405136624956337193964885333e-21,
    2.6447639269208245978085894826666e-22,
    -4.82901575648563878979698688e-23,
    8.9293020743610130180656332799999e-24,
    -1.6708397168972517176997751466666e-24,
    3.1616456034040694931368618666666e-25,
    -6.0462055312274989106506410666666e-26,
    1.1678798942042732700718421333333e-26,
    -2.277374158265399623286784e-27,
    4.4811097300773675795305813333333e-28,
    -8.8932884769020194062336e-29,
    1.7794680018850275131392e-29,
    -3.5884555967329095821994666666666e-30,
    7.2906290492694257991679999999999e-31,
    -1.4918449845546227073024e-31,
    3.0736573872934276300799999999999e-32,
};

// sqrt(x) e^x K1(x) - 1.25 on x >= 8, argument 16/x - 1.
constexpr double kAk12[33] = {
    0.06379308343739001036600488534102,
    0.02832887813049720935835030284708,
    -2.475370673905250345414545566732e-4,
    5.771972451607248820470976625763e-6,
    -2.068939219536548302745533196552e-7,
    9.739983441381804180309213097887e-9,
    -5.585336140380624984688895511129e-10,
    3.732996634046185240221212854731e-11,
    -2.825051961023225445135065754928e-12,
    2.372019002484144173643496955486e-13,
    -2.176677387991753979268301667938e-14,
    2.157914161616032453939562689706e-15,
    -2.290196930718269275991551338154e-16,
    2.582885729823274961919939565226e-17,
    -3.07675264126846318762109817344e-18,
    3.851487721280491597094896844799e-19,
    -5.0447948976415289771172825088e-20,
    6.888673850418544237018292223999e-21,
    -9.77504154195011830300213248e-22,
    1.437416218523836461001659733333e-22,
    -2.185059497344347373499733333333e-23,
    3.4262456218092206316453888e-24,
    -5.531064394246408232501248e-25,
    9.176601505685995403782826666666e-26,
    -1.562287203618024911448746666666e-26,
    2.725419375484333132349439999999e-27,
    -4.865674910074827992378026666666e-28,
    8.879388552723502587357866666666e-29,
    -1.654585918039257548936533333333e-29,
    3.145111321357848674303999999999e-30,
    -6.092998312193127612416e-31,
    1.202021939369815834623999999999e-31,
    -2.412930801459408841386666666666e-32,
};

double chebyshev_sum(double x, const double* cs, int n) {
    double b0 = 0.0;
    double b1 = 0.0;
    double b2 = 0.0;
    const double twox = 2.0 * x;
    for (int i = n - 1; i >= 0; --i) {
        b2 = b1;
        b1 = b0;
        b0 = twox * b1 - b2 + cs[i];
    }
    return 0.5 * (b0 - b2);
}

// sqrt(x) e^x K_nu(x) for x > 2, nu in {0, 1}.
double scaled_k_midrange(int nu, double x) {
    if (x <= 8.0) {
        const double arg = (16.0 / x - 5.0) / 3.0;
        return chebyshev_sum(arg, nu == 0 ? kAk0 : kAk1, 38) + 1.25;
    }
    const double arg = 16.0 / x - 1.0;
    return chebyshev_sum(arg, nu == 0 ? kAk02 : kAk12, 33) + 1.25;
}

// Crossover between the ascending series and the Hankel expansion for I0/I1.
// Below it the series has no cancellation; above it the truncated expansion
// reaches ~e^{-2z} relative error, below 1e-15 from z = 18 on.
constexpr double kAsymptoticCrossover = 18.0;

}  // namespace

double i0(double z) {
    require_nonnegative("i0", z);
    if (z <= kAsymptoticCrossover) return static_cast<double>(i0_series(z));
    const long double x = z;
    return static_cast<double>(std::exp(x) / std::sqrt(2.0L * kPiL * x) *
                               hankel_sum(0, x, -1));
}

double i1(double z) {
    require_nonnegative("i1", z);
    if (z <= kAsymptoticCrossover) return static_cast<double>(i1_series(z));
    const long double x = z;
    return static_cast<double>(std::exp(x) / std::sqrt(2.0L * kPiL * x) *
                               hankel_sum(1, x, -1));
}

double k0(double z) {
    require_positive("k0", z);
    if (z <= 2.0) {
        const long double x = z;
        return static_cast<double>(-std::log(x / 2.0L) * i0_series(x) +
                                   sigma0_series(x));
    }
    return std::exp(-z) * scaled_k_midrange(0, z) / std::sqrt(z);
}

double k1(double z) {
    require_positive("k1", z);
    if (z <= 2.0) {
        const long double x = z;
        return static_cast<double>(1.0L / x + std::log(x / 2.0L) * i1_series(x) +
                                   sigma1_series(x));
    }
    return std::exp(-z) * scaled_k_midrange(1, z) / std::sqrt(z);
}

double sigma0(double z) {
    require_nonnegative("sigma0", z);
    return static_cast<double>(sigma0_series(z));
}

double sigma1(double z) {
    require_nonnegative("sigma1", z);
    return static_cast<double>(sigma1_series(z));
}

}  // namespace kgbem
