// Generated by tests/oracles/gen_oracles.py (mpmath, 60 digits). Do not edit.
#![allow(dead_code, clippy::excessive_precision, clippy::approx_constant)]

pub const PDF_600_500_50_100: f64 = 3.8901263482850361995e-3;
pub const PDF_CASES: &[[f64; 5]] = &[
    [600.0, 500.0, 50.0, 100.0, 3.8901263482850361995e-3],
    [0.0, 500.0, 50.0, 100.0, 7.2634518028646493768e-26],
    [300.0, 500.0, 50.0, 100.0, 2.8448368771529837141e-7],
    [5.0e+3, 500.0, 50.0, 100.0, 3.2436585014245928719e-22],
    [2.0e+4, 500.0, 50.0, 100.0, 2.3273561051892102334e-87],
    [
        1.4728399999999999181e+3,
        451.08999999999997499,
        47.329999999999998295,
        146.81000000000000227,
        6.81184522891825173e-6,
    ],
    [
        451.08999999999997499,
        451.08999999999997499,
        47.329999999999998295,
        146.81000000000000227,
        2.6803765353923681194e-3,
    ],
    [
        -3.0,
        0.0,
        1.0,
        0.010000000000000000208,
        4.3023599862070561439e-3,
    ],
    [
        2.5,
        0.0,
        1.0,
        0.010000000000000000208,
        0.017975853542528885439,
    ],
    [
        0.2999999999999999889,
        0.0,
        1.0000000000000000208e-3,
        1.0,
        0.74081859109092081744,
    ],
    [
        -2.0000000000000000416e-3,
        0.0,
        1.0000000000000000208e-3,
        1.0,
        0.022741644129018676875,
    ],
    [
        40.0,
        0.0,
        1.0000000000000000208e-3,
        1.0,
        4.2483563794692476855e-18,
    ],
    [
        1.0,
        0.0,
        1.0,
        9.9999999999999995475e-7,
        0.24197096648986786846,
    ],
    [12.0, 10.0, 0.5, 3.0, 0.17352158507564899942],
];
pub const PDF_LAMB_CASES: &[[f64; 3]] = &[
    [1.0, 0.9000000000000000222, 0.15129555288275866838],
    [0.0, 0.2000000000000000111, 0.39935372857100981726],
    [-2.0, 0.5, 0.047889609408720272646],
    [3.0, 0.5, 8.0880421612151083682e-3],
    [5.5, 0.98999999999999999112, 1.4512163757305272133e-3],
    [-1.1999999999999999556, 0.25, 0.19544422718460599271],
    [0.0, 0.050000000000000002776, 0.39894413002188619391],
];
pub const CDF_AT_MEAN_500_50_100: f64 = 0.58823723322331717285;
pub const CDF_CASES: &[[f64; 5]] = &[
    [600.0, 500.0, 50.0, 100.0, 0.58823723322331717285],
    [400.0, 500.0, 50.0, 100.0, 3.6230161855814801925e-3],
    [450.0, 500.0, 50.0, 100.0, 0.033842970233552130291],
    [900.0, 500.0, 50.0, 100.0, 0.97924566212630029794],
    [1.5e+3, 500.0, 50.0, 100.0, 0.99994855513982029772],
    [0.5, 0.0, 1.0, 0.25, 0.59761319258738511632],
    [-2.5, 0.0, 1.0, 0.25, 3.5727605818592252812e-3],
    [
        3.0,
        0.0,
        0.10000000000000000555,
        1.0,
        0.94996337291341371212,
    ],
];
pub const ZALP_0_1_500_50_100: f64 = 742.75844589810808127;
pub const ZALP_0_001_YOUNG_GNG: f64 = 1.4728468996226866606e+3;
pub const ZALP_LAMB_0_05_0_5: f64 = 1.6890055034663024753;
pub const STATS_500_50_100_S: f64 = 111.80339887498948482;
pub const STATS_500_50_100_T: f64 = 1.4310835055998654057;
pub const ERFCX_CASES: &[[f64; 2]] = &[
    [-26.0, 7.6577249314905683515e+293],
    [-5.0, 1.4400979867466104041e+11],
    [-1.0, 5.0089800807622834663],
    [-0.3, 1.4537492328427655735],
    [0.0, 1.0],
    [0.2, 0.80901951990158074176],
    [0.46875, 0.63206968924955607816],
    [0.5, 0.61569034419292587487],
    [1.0, 0.42758357615580700441],
    [2.5, 0.21080636406114358065],
    [3.9, 0.14031418160068973267],
    [4.0, 0.13699945762506138989],
    [4.1, 0.13383411641865198274],
    [10.0, 0.056140992743822585858],
    [30.0, 0.018795888861416751497],
    [1.0e+3, 5.641893014533876542e-4],
    [1.0e+8, 5.6418958354775625874e-9],
];
pub const ERFC_CASES: &[[f64; 2]] = &[
    [-3.0, 1.9999779095030014146],
    [-0.7, 1.677801193837418473],
    [-0.1, 1.1124629160182848922],
    [0.1, 0.8875370839817151078],
    [0.46875, 0.50738652678206200841],
    [0.9, 0.20309178757716787148],
    [2.0, 4.6777349810472658379e-3],
    [5.0, 1.5374597944280348502e-12],
    [10.0, 2.088487583762544757e-45],
    [26.0, 5.6631924088561428465e-296],
];
pub const F_SF_CASES: &[[f64; 4]] = &[
    [0.5, 2.0, 9.0, 0.62243111185094210392],
    [3.2000000000000001776, 2.0, 9.0, 0.089176012441807510993],
    [10.0, 3.0, 20.0, 3.0940546351440708255e-4],
    [1.0, 1.0, 1.0, 0.5],
    [4.7000000000000001776, 5.0, 40.0, 1.8075090534184593428e-3],
    [0.010000000000000000208, 4.0, 100.0, 0.99979880643998497333],
    [25.0, 2.0, 30.0, 4.0782046539789007511e-7],
];
pub const GL5: &[[f64; 2]] = &[
    [-0.9061798459386639928, 0.23692688505618908751],
    [-0.53846931010568309104, 0.47862867049936646804],
    [0.0, 0.56888888888888888889],
    [0.53846931010568309104, 0.47862867049936646804],
    [0.9061798459386639928, 0.23692688505618908751],
];
