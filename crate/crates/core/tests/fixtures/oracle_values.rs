// Generated by oracles.py (mpmath). Do not edit by hand.

/// (re z, im z, re lnGamma(z), im lnGamma(z))
pub const LOG_GAMMA: &[(f64, f64, f64, f64)] = &[
    (1.0, 1.0, -0.65092319930185633889, -0.30164032046753319789),
    (0.5, 0.1, 0.54808643117197697231, -0.19360871833945302018),
    (0.25, -3.0, -4.0672194091374119856, 0.093384313393169383050),
    (3.7, 0.2, 1.4218754491204911176, 0.23355776042367811993),
    (10.5, -3.0, 13.497486300315456517, -6.9527349247561603320),
    (1.0, 22.8, -33.331837449738773734, 49.271883178040116763),
    (11.0, 22.8, -1.7152676447867300001, 62.646186552573816804),
    (1001.0, 22.8, 5911.8684108858858594, 157.51019157101390949),
    (100001.0, 22.8, 1051299.2192999348836, 262.49481479866843770),
    (1000000.0, 1.0, 12815504.569147111660, 13.815510057964357438),
    (2.0, 500.0, -775.15731071661434925, 2609.6580770372659876),
];

/// (re z, im z, re psi(z), im psi(z))
pub const DIGAMMA: &[(f64, f64, f64, f64)] = &[
    (1.0, 0.0, -0.57721566490153286061, 0.0),
    (11.0, 0.0, 2.3517525890667211076, 0.0),
    (0.3, 0.7, -0.44720792029956117395, 1.8918108552185266687),
    (1.0, 22.8, 3.1269208725613129742, 1.5488665022334931111),
    (5.0, 22.8, 3.1457965158513561890, 1.3759030782966126294),
    (1001.0, 22.8, 6.9085147884587036204, 0.022784660166956434436),
    (2.5, -40.0, 3.6901020442694908040, -1.5208353393155890752),
];

/// (n, x, J_n(x))
pub const BESSEL_J: &[(u32, f64, f64)] = &[
    (0, 0.5, 0.93846980724081290423),
    (0, 1.9, 0.28181855937438552233),
    (0, 3.0, -0.26005195490193343762),
    (0, 10.0, -0.24593576445134833520),
    (0, 57.3, 0.10533413321246040857),
    (0, 400.25, -0.035337590661798835345),
    (0, 1000.0, 0.024786686152420174561),
    (1, 0.5, 0.24226845767487388638),
    (1, 1.9, 0.58115707271343407482),
    (1, 3.0, 0.33905895852593645893),
    (1, 10.0, 0.043472746168861436670),
    (1, 57.3, -0.0029007973423950917197),
    (1, 400.25, -0.018532230017066401724),
    (1, 1000.0, 0.0047283119070895239176),
    (2, 0.5, 0.030604023458682641307),
    (2, 1.9, 0.32992572769238721660),
    (2, 3.0, 0.48609126058589107691),
    (2, 10.0, 0.25463031368512062253),
    (2, 57.3, -0.10543538268339915523),
    (2, 400.25, 0.035244987388759153138),
    (2, 1000.0, -0.024777229528605995513),
    (3, 0.5, 0.0025637299945872440754),
    (3, 1.9, 0.11342340663896009787),
    (3, 3.0, 0.30906272225525164362),
    (3, 10.0, 0.058379379305186812343),
    (3, 57.3, -0.0044594387960620922567),
    (3, 400.25, 0.018884459747372551911),
    (3, 1000.0, -0.0048274208252039478996),
    (4, 0.5, 0.00016073647636428759684),
    (4, 1.9, 0.028253451167486793406),
    (4, 3.0, 0.13203418392461221033),
    (4, 10.0, -0.21960268610200853513),
    (4, 57.3, 0.10496842574140312461),
    (4, 400.25, -0.034961897423776678906),
    (4, 1000.0, 0.024748265003654771826),
    (7, 0.5, 0.000000012015867327763022876),
    (7, 1.9, 0.00012368843103972501705),
    (7, 3.0, 0.0025472944518046937591),
    (7, 10.0, 0.21671091768505151406),
    (7, 57.3, -0.040399014628008037452),
    (7, 400.25, 0.020616793638090730463),
    (7, 1000.0, -0.0053217830764436153538),
];

/// (m, z, exp(-z) I_m(z))
pub const MU_EXACT: &[(u32, f64, f64)] = &[
    (0, 0.1, 0.90710092578230109165),
    (1, 0.1, 0.045298446808809327277),
    (3, 5.0, 0.069610742279333228684),
    (2, 29.99, 0.068361446183721198122),
    (2, 30.01, 0.068341606939942879306),
    (2, 50.0, 0.054321901691738376544),
    (10, 30.0, 0.013646390946186456687),
    (0, 50.0, 0.056561626647454192530),
    (0, 100.0, 0.039944379299096682648),
    (0, 500.0, 0.017845706500153167237),
    (0, 1000.0, 0.012617240455891256586),
    (7, 2000.0, 0.0088125335921237381830),
    (40, 300.0, 0.0016002898291930656991),
    (64, 100000.0, 0.0012359935759821685205),
    (0, 100000.0, 0.0012615678379767767669),
    (20, 12.5, 0.000000075805860987278641649),
];

/// (l, m1, m2, theta, d^l_{m1 m2}(theta))
pub const WIGNER_D: &[(u32, i32, i32, f64, f64)] = &[
    (10, 3, -2, 1.0, 0.28280197868220625226),
    (50, 9, 4, 2.5, 0.062499337385042164531),
    (100, 2, 0, 0.1, 0.25417765167723550842),
    (500, 2, -1, 0.2, -0.073778573092017751743),
    (1000, 3, 1, 0.05, -0.062074410013446499272),
    (1000, -2, 2, 0.3, -0.027393006402243549566),
    (2500, 4, -4, 0.05, 0.027931924471301423338),
    (4000, 2, 2, 1.5707963267948966, 0.012614869426439280770),
    (5000, 1, -2, 1.5707963267948966, 0.0000045128399138028696266),
    (7500, 9, -9, 1.5707963267948966, -0.0092123396322035954101),
    (7500, 0, 0, 1.5707963267948966, 0.0092128702184442564794),
    (6000, -5, 3, 1.2, 0.0080772503591842396287),
    (3000, 150, -150, 0.1, 0.066188644540146901537),
    (8000, 4, -3, 0.7, 0.010549195566633880220),
    (8000, 9, 9, 3.0, 0.0086949733964410305122),
];
