const CP1_REFERENCE: &[([f64; 6], &[(f64, f64)], f64, f64)] = &[
    ([1.5, 0.5, 1.0, 9.8696044010893586188, 1.0, 0.0], &[], 0.4, 0.043109340760646266908),
    ([1.5, 0.5, 1.0, 9.8696044010893586188, 0.5, -1.0], &[(1.0, 0.0), (1.0, 1.0)], 0.7, 0.013460300293400083308),
    ([1.8, 0.3, 2.5, 40.0, 0.0, 1.0], &[(2.0, 0.5)], 1.3, 0.048865519308618865777),
    ([1.2, 0.7, 0.3, 3.0, 1.0, 0.5], &[], 2.0, 0.11722394377032054444),
];
const CP2_REFERENCE: &[([f64; 4], &[(f64, f64)], f64, f64)] = &[
    ([1.2, 4.0, 1.0, 0.0], &[], 0.5, 0.13052084717262406986),
    ([1.25, 9.869604401089358, 0.3, -0.7], &[(1.0, 0.0), (2.0, 1.0)], 0.8, 0.16443065108072660196),
    ([1.7, 100.0, -1.0, 2.0], &[(3.0, 1.5)], 1.0, 0.046853150801768945943),
];
