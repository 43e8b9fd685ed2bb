// Generated by generate_reference_grid.py -- do not edit by hand.
#pragma once

namespace dmr_test {

inline constexpr int kGridSize = 1000;

inline constexpr double kGridX[kGridSize] = {
    0.001, 0.0010209606623060466, 0.0010423606739764012, 0.0010642092440647246,
    0.0010865157746525384, 0.0011092898648952228, 0.0011325413151528115, 0.0011562801312073755,
    0.0011805165285688056, 0.0012052609368708425, 0.0012305240043592616, 0.0012563166024741202,
    0.0012826498305280598, 0.0013095350204826678, 0.0013369837418249467, 0.0013650078065460137,
    0.0013936192742241421, 0.001422830457214352, 0.0014526539259467812, 0.0014831025143361043,
    0.001514189325304352, 0.001545927736419477, 0.001578331405652118, 0.0016114142772530198,
    0.0016451905877536625, 0.0016796748720926532, 0.001714881969870539, 0.001750827031735725,
    0.0017875255259042354, 0.0018249932448161524, 0.0018632463119315598, 0.0019023011886689439,
    0.0019421746814890265, 0.0019828839491270716, 0.002024446509976804, 0.0020668802496290823,
    0.0021102034285685966, 0.0021544346900318843, 0.0021995930680300748, 0.002245697995539774,
    0.002292769312865649, 0.0023408272761782944, 0.00238989256623105, 0.00243998629725955,
    0.0024911300260677884, 0.002543345761304648, 0.0025966559729348722, 0.002651083601908539,
    0.0027066520700332413, 0.00276338529005317, 0.002821307675939471, 0.002880444153396298,
    0.002940820170587064, 0.003002461709085549, 0.003065395295056527, 0.0031296480106707504,
    0.0031952475057592136, 0.00326222200971167, 0.0033306003436245884, 0.0034004119327037063,
    0.0034716868189265592, 0.0035444556739704356, 0.0036187498124112803, 0.0036946012051993025,
    0.0037720424934169976, 0.003851107002325569, 0.003931828755705771, 0.004014242490499322,
    0.0040983836717572615, 0.004184288507901581, 0.004271993966306777, 0.004361537789208006,
    0.004452958509942656, 0.0045462954695324, 0.004641588833612777, 0.004738879609717651,
    0.004838209664925958, 0.004939621743878321, 0.005043159487171359, 0.005148867450137492,
    0.005256791122018419, 0.0053669769455404765, 0.005479472336900287, 0.005594325706169377,
    0.0057115864781264345, 0.005831305113526219, 0.00595353313081437, 0.00607832312829723,
    0.0062057288067765, 0.006335804992658254, 0.006468607661546328, 0.006604193962330305,
    0.006742622241778342, 0.0068839520696454964, 0.0070282442643083524, 0.007175560918936928,
    0.00732596542821523, 0.007479522515621821, 0.007636298261282242, 0.0077963601304052365,
    0.007959777002314986, 0.008126619200091946, 0.008296958520834907, 0.008470868266557402,
    0.008648423275731726, 0.008829699955494092, 0.009014776314524917, 0.009203731996618222,
    0.009396648314954691, 0.009593608287093146, 0.009794696670695395, 0.01,
    0.010209606623060466, 0.010423606739764018, 0.010642092440647241, 0.010865157746525383,
    0.011092898648952227, 0.011325413151528114, 0.01156280131207376, 0.011805165285688049,
    0.012052609368708425, 0.012305240043592616, 0.012563166024741208, 0.012826498305280605,
    0.01309535020482667, 0.013369837418249465, 0.013650078065460139, 0.013936192742241428,
    0.014228304572143526, 0.014526539259467805, 0.014831025143361045, 0.01514189325304352,
    0.015459277364194777, 0.015783314056521173, 0.016114142772530198, 0.016451905877536626,
    0.01679674872092653, 0.017148819698705402, 0.017508270317357244, 0.017875255259042353,
    0.018249932448161525, 0.018632463119315597, 0.019023011886689447, 0.019421746814890256,
    0.019828839491270712, 0.020244465099768037, 0.02066880249629083, 0.021102034285685956,
    0.021544346900318832, 0.021995930680300747, 0.02245697995539774, 0.022927693128656498,
    0.023408272761782933, 0.02389892566231049, 0.024399862972595502, 0.024911300260677886,
    0.025433457613046495, 0.02596655972934871, 0.026510836019085375, 0.027066520700332414,
    0.027633852900531698, 0.02821307675939472, 0.028804441533962964, 0.029408201705870638,
    0.030024617090855493, 0.030653952950565267, 0.03129648010670752, 0.03195247505759212,
    0.0326222200971167, 0.03330600343624589, 0.03400411932703706, 0.034716868189265615,
    0.035444556739704335, 0.0361874981241128, 0.03694601205199302, 0.037720424934169994,
    0.03851107002325571, 0.039318287557057685, 0.04014242490499322, 0.040983836717572615,
    0.041842885079015825, 0.04271993966306779, 0.04361537789208003, 0.044529585099426554,
    0.04546295469532399, 0.046415888336127795, 0.047388796097176535, 0.04838209664925955,
    0.04939621743878321, 0.050431594871713586, 0.05148867450137495, 0.05256791122018422,
    0.05366976945540476, 0.05479472336900287, 0.05594325706169378, 0.05711586478126432,
    0.058313051135262216, 0.0595353313081437, 0.0607832312829723, 0.062057288067765004,
    0.0633580499265825, 0.06468607661546324, 0.06604193962330306, 0.06742622241778343,
    0.06883952069645499, 0.07028244264308349, 0.07175560918936924, 0.0732596542821523,
    0.07479522515621821, 0.07636298261282246, 0.07796360130405233, 0.07959777002314981,
    0.08126619200091946, 0.08296958520834907, 0.08470868266557406, 0.08648423275731722,
    0.08829699955494091, 0.09014776314524918, 0.09203731996618221, 0.09396648314954696,
    0.09593608287093142, 0.09794696670695395, 0.1, 0.10209606623060465,
    0.10423606739764012, 0.10642092440647247, 0.10865157746525383, 0.11092898648952228,
    0.11325413151528115, 0.11562801312073753, 0.11805165285688056, 0.12052609368708427,
    0.12305240043592616, 0.125631660247412, 0.12826498305280598, 0.13095350204826678,
    0.13369837418249467, 0.1365007806546014, 0.1393619274224142, 0.14228304572143535,
    0.14526539259467813, 0.14831025143361043, 0.1514189325304352, 0.1545927736419477,
    0.1578331405652118, 0.161141427725302, 0.16451905877536624, 0.16796748720926533,
    0.17148819698705392, 0.17508270317357252, 0.17875255259042355, 0.18249932448161524,
    0.18632463119315598, 0.1902301188668944, 0.19421746814890264, 0.19828839491270714,
    0.2024446509976804, 0.2066880249629082, 0.21102034285685944, 0.21544346900318845,
    0.2199593068030075, 0.2245697995539774, 0.22927693128656487, 0.2340827276178292,
    0.23898925662310502, 0.243998629725955, 0.24911300260677885, 0.25433457613046484,
    0.25966559729348726, 0.2651083601908539, 0.27066520700332414, 0.27633852900531697,
    0.28213076759394706, 0.28804441533962977, 0.29408201705870635, 0.30024617090855493,
    0.30653952950565266, 0.312964801067075, 0.31952475057592133, 0.326222200971167,
    0.33306003436245885, 0.34004119327037063, 0.34716868189265593, 0.3544455673970436,
    0.36187498124112805, 0.36946012051993027, 0.37720424934169977, 0.3851107002325569,
    0.393182875570577, 0.4014242490499322, 0.40983836717572614, 0.418428850790158,
    0.4271993966306781, 0.4361537789208006, 0.44529585099426555, 0.4546295469532399,
    0.46415888336127775, 0.4738879609717656, 0.4838209664925957, 0.4939621743878321,
    0.5043159487171359, 0.5148867450137492, 0.5256791122018425, 0.5366976945540476,
    0.5479472336900287, 0.5594325706169377, 0.5711586478126429, 0.5831305113526225,
    0.595353313081437, 0.6078323128297229, 0.62057288067765, 0.6335804992658248,
    0.6468607661546327, 0.6604193962330305, 0.6742622241778342, 0.6883952069645496,
    0.7028244264308345, 0.7175560918936928, 0.732596542821523, 0.7479522515621821,
    0.7636298261282242, 0.7796360130405237, 0.7959777002314986, 0.8126619200091946,
    0.8296958520834906, 0.8470868266557402, 0.8648423275731727, 0.8829699955494091,
    0.9014776314524917, 0.9203731996618221, 0.9396648314954691, 0.9593608287093147,
    0.9794696670695395, 1.0, 1.0209606623060465, 1.042360673976401,
    1.0642092440647246, 1.0865157746525385, 1.1092898648952227, 1.1325413151528114,
    1.1562801312073754, 1.1805165285688055, 1.2052609368708427, 1.2305240043592616,
    1.2563166024741201, 1.2826498305280598, 1.3095350204826677, 1.3369837418249466,
    1.3650078065460138, 1.393619274224142, 1.4228304572143533, 1.4526539259467812,
    1.4831025143361045, 1.514189325304352, 1.545927736419477, 1.578331405652118,
    1.6114142772530198, 1.6451905877536626, 1.679674872092653, 1.714881969870539,
    1.750827031735725, 1.7875255259042355, 1.8249932448161523, 1.8632463119315599,
    1.9023011886689438, 1.9421746814890264, 1.9828839491270713, 2.0244465099768036,
    2.066880249629082, 2.110203428568594, 2.1544346900318843, 2.1995930680300746,
    2.245697995539774, 2.292769312865649, 2.340827276178292, 2.38989256623105,
    2.43998629725955, 2.4911300260677884, 2.543345761304648, 2.5966559729348724,
    2.651083601908539, 2.7066520700332415, 2.76338529005317, 2.8213076759394706,
    2.8804441533962977, 2.9408201705870636, 3.002461709085549, 3.065395295056527,
    3.1296480106707505, 3.195247505759214, 3.26222200971167, 3.330600343624589,
    3.400411932703706, 3.4716868189265595, 3.5444556739704356, 3.6187498124112802,
    3.6946012051993025, 3.7720424934169974, 3.851107002325569, 3.9318287557057703,
    4.014242490499322, 4.0983836717572615, 4.18428850790158, 4.271993966306781,
    4.361537789208006, 4.452958509942655, 4.546295469532399, 4.6415888336127775,
    4.738879609717656, 4.838209664925957, 4.9396217438783205, 5.0431594871713585,
    5.148867450137493, 5.2567911220184245, 5.366976945540476, 5.479472336900287,
    5.594325706169378, 5.711586478126429, 5.831305113526224, 5.95353313081437,
    6.07832312829723, 6.2057288067765, 6.335804992658248, 6.4686076615463275,
    6.604193962330306, 6.742622241778342, 6.883952069645496, 7.028244264308346,
    7.175560918936928, 7.3259654282152304, 7.479522515621821, 7.636298261282241,
    7.796360130405237, 7.959777002314985, 8.126619200091946, 8.296958520834906,
    8.470868266557403, 8.648423275731727, 8.829699955494092, 9.014776314524918,
    9.20373199661822, 9.39664831495469, 9.593608287093147, 9.794696670695396,
    10.0, 10.209606623060475, 10.423606739764011, 10.642092440647247,
    10.865157746525373, 11.092898648952227, 11.325413151528126, 11.562801312073754,
    11.805165285688055, 12.052609368708413, 12.305240043592615, 12.563166024741214,
    12.826498305280598, 13.095350204826676, 13.369837418249451, 13.650078065460137,
    13.936192742241435, 14.22830457214352, 14.526539259467812, 14.831025143361028,
    15.14189325304352, 15.459277364194785, 15.783314056521165, 16.114142772530197,
    16.451905877536607, 16.79674872092653, 17.14881969870541, 17.508270317357233,
    17.875255259042355, 18.24993244816154, 18.6324631193156, 19.023011886689456,
    19.421746814890245, 19.828839491270713, 20.24446509976806, 20.66880249629082,
    21.102034285685967, 21.54434690031882, 21.99593068030075, 22.456979955397763,
    22.927693128656486, 23.408272761782943, 23.89892566231048, 24.399862972595503,
    24.911300260677912, 25.433457613046482, 25.966559729348724, 26.510836019085364,
    27.06652070033241, 27.63385290053173, 28.213076759394706, 28.80444153396298,
    29.408201705870606, 30.024617090855493, 30.653952950565298, 31.296480106707506,
    31.952475057592135, 32.62222009711667, 33.30600343624589, 34.004119327037095,
    34.7168681892656, 35.44455673970435, 36.187498124112764, 36.94601205199302,
    37.72042493417001, 38.51107002325569, 39.3182875570577, 40.14242490499318,
    40.983836717572615, 41.84288507901584, 42.71993966306777, 43.615377892080055,
    44.529585099426505, 45.462954695323994, 46.41588833612782, 47.38879609717651,
    48.38209664925957, 49.396217438783154, 50.431594871713585, 51.48867450137497,
    52.56791122018419, 53.66976945540476, 54.79472336900282, 55.94325706169378,
    57.11586478126435, 58.313051135262185, 59.535331308143704, 60.78323128297236,
    62.05728806776501, 63.358049926582545, 64.68607661546321, 66.04193962330305,
    67.42622241778349, 68.83952069645497, 70.28244264308353, 71.75560918936921,
    73.2596542821523, 74.7952251562183, 76.36298261282242, 77.96360130405237,
    79.59777002314978, 81.26619200091946, 82.96958520834914, 84.70868266557402,
    86.48423275731727, 88.29699955494083, 90.14776314524917, 92.03731996618231,
    93.9664831495469, 95.93608287093147, 97.94696670695386, 100.0,
    102.09606623060476, 104.23606739764011, 106.42092440647247, 108.65157746525372,
    110.92898648952227, 113.25413151528126, 115.62801312073753, 118.05165285688055,
    120.52609368708414, 123.05240043592616, 125.63166024741214, 128.264983052806,
    130.95350204826676, 133.69837418249452, 136.50078065460139, 139.36192742241434,
    142.2830457214352, 145.26539259467813, 148.3102514336103, 151.4189325304352,
    154.59277364194784, 157.83314056521164, 161.14142772530198, 164.5190587753661,
    167.96748720926533, 171.4881969870541, 175.08270317357233, 178.75255259042353,
    182.49932448161542, 186.324631193156, 190.23011886689457, 194.21746814890244,
    198.28839491270713, 202.44465099768058, 206.6880249629082, 211.02034285685966,
    215.44346900318823, 219.95930680300748, 224.56979955397762, 229.2769312865649,
    234.08272761782942, 238.98925662310478, 243.99862972595503, 249.1130026067791,
    254.33457613046482, 259.6655972934872, 265.1083601908536, 270.66520700332416,
    276.33852900531724, 282.1307675939471, 288.0444153396298, 294.08201705870607,
    300.2461709085549, 306.539529505653, 312.96480106707503, 319.52475057592136,
    326.22220097116667, 333.06003436245885, 340.04119327037097, 347.16868189265597,
    354.44556739704353, 361.87498124112767, 369.46012051993023, 377.2042493417001,
    385.1107002325569, 393.18287557057704, 401.4242490499318, 409.83836717572615,
    418.42885079015844, 427.19939663067765, 436.15377892080056, 445.2958509942651,
    454.6295469532399, 464.1588833612782, 473.8879609717651, 483.82096649259574,
    493.96217438783157, 504.3159487171359, 514.8867450137498, 525.6791122018419,
    536.6976945540476, 547.9472336900282, 559.4325706169377, 571.1586478126435,
    583.1305113526219, 595.353313081437, 607.8323128297236, 620.57288067765,
    633.5804992658254, 646.8607661546321, 660.4193962330305, 674.2622241778349,
    688.3952069645496, 702.8244264308353, 717.5560918936922, 732.596542821523,
    747.9522515621828, 763.6298261282242, 779.6360130405237, 795.9777002314978,
    812.6619200091945, 829.6958520834916, 847.0868266557402, 864.8423275731726,
    882.9699955494083, 901.4776314524918, 920.373199661823, 939.6648314954691,
    959.3608287093147, 979.4696670695386, 1000.0, 1020.9606623060475,
    1042.3606739764011, 1064.2092440647245, 1086.5157746525372, 1109.2898648952228,
    1132.5413151528126, 1156.2801312073755, 1180.5165285688056, 1205.2609368708413,
    1230.5240043592617, 1256.3166024741215, 1282.64983052806, 1309.5350204826677,
    1336.9837418249451, 1365.0078065460139, 1393.6192742241435, 1422.830457214352,
    1452.6539259467813, 1483.1025143361028, 1514.189325304352, 1545.9277364194786,
    1578.3314056521165, 1611.41427725302, 1645.1905877536608, 1679.6748720926532,
    1714.8819698705408, 1750.8270317357233, 1787.5255259042356, 1824.9932448161542,
    1863.2463119315598, 1902.3011886689458, 1942.1746814890244, 1982.8839491270714,
    2024.4465099768058, 2066.880249629082, 2110.2034285685963, 2154.4346900318824,
    2199.593068030075, 2245.6979955397765, 2292.7693128656488, 2340.827276178294,
    2389.892566231048, 2439.98629725955, 2491.130026067791, 2543.345761304648,
    2596.6559729348724, 2651.0836019085364, 2706.652070033241, 2763.385290053173,
    2821.3076759394708, 2880.4441533962977, 2940.8201705870606, 3002.4617090855495,
    3065.39529505653, 3129.6480106707504, 3195.2475057592137, 3262.2220097116665,
    3330.6003436245887, 3400.4119327037097, 3471.6868189265597, 3544.455673970436,
    3618.7498124112767, 3694.6012051993025, 3772.0424934170014, 3851.107002325569,
    3931.82875570577, 4014.2424904993177, 4098.383671757261, 4184.288507901585,
    4271.993966306776, 4361.537789208006, 4452.958509942651, 4546.2954695324,
    4641.588833612782, 4738.879609717651, 4838.209664925957, 4939.621743878316,
    5043.159487171359, 5148.867450137498, 5256.791122018419, 5366.976945540476,
    5479.472336900281, 5594.325706169378, 5711.5864781264345, 5831.3051135262185,
    5953.53313081437, 6078.3231282972365, 6205.7288067765, 6335.804992658254,
    6468.607661546321, 6604.193962330305, 6742.622241778349, 6883.9520696454965,
    7028.244264308352, 7175.560918936921, 7325.9654282152305, 7479.5225156218285,
    7636.298261282242, 7796.360130405237, 7959.777002314978, 8126.6192000919455,
    8296.958520834914, 8470.868266557402, 8648.423275731726, 8829.699955494083,
    9014.776314524917, 9203.73199661823, 9396.648314954691, 9593.608287093148,
    9794.696670695386, 10000.0, 10209.606623060476, 10423.60673976401,
    10642.092440647246, 10865.157746525372, 11092.898648952229, 11325.413151528126,
    11562.801312073754, 11805.165285688056, 12052.609368708414, 12305.240043592616,
    12563.166024741215, 12826.498305280598, 13095.350204826676, 13369.837418249452,
    13650.078065460139, 13936.192742241436, 14228.30457214352, 14526.539259467812,
    14831.025143361028, 15141.89325304352, 15459.277364194786, 15783.314056521165,
    16114.142772530198, 16451.905877536607, 16796.74872092653, 17148.81969870541,
    17508.270317357234, 17875.255259042355, 18249.932448161544, 18632.4631193156,
    19023.01188668946, 19421.746814890244, 19828.839491270715, 20244.46509976806,
    20668.80249629082, 21102.034285685964, 21544.346900318822, 21995.93068030075,
    22456.979955397765, 22927.693128656487, 23408.272761782944, 23898.925662310477,
    24399.862972595503, 24911.300260677912, 25433.45761304648, 25966.559729348723,
    26510.836019085364, 27066.520700332414, 27633.852900531725, 28213.076759394706,
    28804.441533962978, 29408.201705870608, 30024.617090855492, 30653.952950565297,
    31296.480106707506, 31952.475057592135, 32622.220097116664, 33306.00343624588,
    34004.11932703709, 34716.868189265595, 35444.556739704356, 36187.49812411277,
    36946.01205199302, 37720.42493417001, 38511.07002325569, 39318.2875570577,
    40142.424904993175, 40983.836717572616, 41842.88507901585, 42719.939663067766,
    43615.377892080054, 44529.585099426506, 45462.95469532399, 46415.88833612782,
    47388.79609717651, 48382.09664925957, 49396.217438783155, 50431.59487171359,
    51488.674501374975, 52567.91122018419, 53669.76945540476, 54794.723369002815,
    55943.257061693774, 57115.86478126435, 58313.05113526218, 59535.3313081437,
    60783.23128297236, 62057.288067765, 63358.04992658254, 64686.07661546321,
    66041.93962330306, 67426.22241778349, 68839.52069645496, 70282.44264308353,
    71755.6091893692, 73259.6542821523, 74795.2251562183, 76362.98261282242,
    77963.60130405237, 79597.77002314977, 81266.19200091946, 82969.58520834915,
    84708.68266557403, 86484.23275731727, 88296.99955494083, 90147.76314524918,
    92037.3199661823, 93966.48314954691, 95936.08287093147, 97946.96670695386,
    100000.0, 102096.06623060476, 104236.06739764033, 106420.92440647224,
    108651.57746525372, 110928.98648952227, 113254.13151528126, 115628.01312073777,
    118051.65285688032, 120526.09368708414, 123052.40043592616, 125631.66024741215,
    128264.98305280624, 130953.5020482665, 133698.37418249453, 136500.78065460137,
    139361.92742241436, 142283.04572143548, 145265.39259467783, 148310.25143361028,
    151418.9325304352, 154592.77364194786, 157833.14056521197, 161141.42772530165,
    164519.05877536608, 167967.48720926532, 171488.19698705408, 175082.7031735727,
    178752.55259042318, 182499.32448161504, 186324.63119315598, 190230.11886689457,
    194217.46814890284, 198288.39491270675, 202444.65099768018, 206688.0249629082,
    211020.34285685964, 215443.46900318866, 219959.30680300703, 224569.79955397718,
    229276.93128656488, 234082.72761782943, 238989.25662310526, 243998.62972595452,
    249113.00260677858, 254334.57613046482, 259665.59729348726, 265108.3601908542,
    270665.2070033236, 276338.5290053167, 282130.76759394706, 288044.4153396298,
    294082.01705870667, 300246.17090855434, 306539.5295056524, 312964.80106707505,
    319524.7505759214, 326222.2009711673, 333060.03436245956, 340041.19327037025,
    347168.68189265596, 354445.5673970436, 361874.9812411284, 369460.120519931,
    377204.24934169935, 385110.7002325569, 393182.87557057705, 401424.2490499326,
    409838.367175727, 418428.8507901576, 427199.3966306777, 436153.77892080054,
    445295.850994266, 454629.5469532409, 464158.8833612772, 473887.9609717651,
    483820.96649259573, 493962.1743878326, 504315.9487171369, 514886.7450137487,
    525679.1122018419, 536697.6945540477, 547947.2336900292, 559432.5706169389,
    571158.6478126423, 583130.5113526218, 595353.313081437, 607832.3128297236,
    620572.8806776513, 633580.4992658241, 646860.7661546321, 660419.3962330305,
    674262.2241778349, 688395.206964551, 702824.4264308339, 717556.0918936922,
    732596.542821523, 747952.2515621829, 763629.8261282258, 779636.0130405221,
    795977.7002314978, 812661.9200091945, 829695.8520834915, 847086.826655742,
    864842.3275731709, 882969.9955494083, 901477.6314524917, 920373.199661823,
    939664.831495471, 959360.8287093127, 979469.6670695386, 1000000.0,
};

inline constexpr double kGridLogGamma[kGridSize] = {
    6.907178885383853, 6.886422811528984, 6.865666485548987, 6.844909902190662,
    6.824153056092037, 6.803395941780135, 6.782638553668712, 6.761880886055942,
    6.741122933122057, 6.720364688926947, 6.699606147407698, 6.678847302376098,
    6.6580881475160805, 6.637328676381128, 6.616568882391617, 6.595808758832111,
    6.575048298848607, 6.55428749544572, 6.533526341483819, 6.5127648296761045,
    6.492002952585621, 6.471240702622232, 6.45047807203951, 6.42971505293159,
    6.408951637229942, 6.388187816700098, 6.367423582938304, 6.346658927368113,
    6.325893841236909, 6.305128315612372, 6.284362341378862, 6.263595909233748,
    6.242829009683658, 6.222061633040663, 6.20129376941838, 6.180525408728014,
    6.159756540674313, 6.138987154751456, 6.1182172402388595, 6.097446786196901,
    6.076675781462574, 6.05590421464505, 6.03513207412117, 6.014359348030835,
    5.993586024272336, 5.972812090497569, 5.9520375341071885, 5.93126234224566,
    5.910486501796216, 5.889709999375733, 5.868932821329513, 5.84815495372596,
    5.827376382351176, 5.806597092703451, 5.785817069987655, 5.765036299109536,
    5.744254764669908, 5.723472450958749, 5.702689341949183, 5.681905421291366,
    5.66112067230626, 5.640335077979303, 5.619548620953973, 5.5987612835252305,
    5.577973047632864, 5.557183894854712, 5.536393806399778, 5.515602763101229,
    5.494810745409269, 5.4740177333839135, 5.453223706687628, 5.432428644577851,
    5.41163252589941, 5.3908353290767925, 5.370037032106313, 5.349237612548149,
    5.328437047518249, 5.30763531368013, 5.286832387236526, 5.266028243920929,
    5.245222858988993, 5.224416207209811, 5.203608262857069, 5.18279899970006,
    5.161988390994577, 5.141176409473679, 5.12036302733831, 5.099548216247811,
    5.078731947310287, 5.057914191072844, 5.037094917511706, 5.016274096022192,
    4.995451695408571, 4.974627683873788, 4.953802029009055, 4.932974697783337,
    4.912145656532678, 4.891314870949439, 4.870482306071392, 4.849647926270695,
    4.828811695242761, 4.807973575994994, 4.787133530835422, 4.766291521361211,
    4.745447508447078, 4.724601452233595, 4.703753312115384, 4.682903046729223,
    4.662050613942053, 4.641195970838894, 4.620339073710684, 4.599479878042022,
    4.578618338498846, 4.557754408916047, 4.536888042285008, 4.516019190741093,
    4.495147805551093, 4.474273837100616, 4.4533972348814554, 4.432517947478938,
    4.4116359225592365, 4.390751106856703, 4.369863446161185, 4.3489728853053755,
    4.328079368152174, 4.307182837582102, 4.286283235480767, 4.26538050272639,
    4.244474579177418, 4.223565403660241, 4.202652913957007, 4.181737046793588,
    4.160817737827676, 4.139894921637068, 4.118968531708119, 4.098038500424423,
    4.077104759055718, 4.056167237747048, 4.035225865508214, 4.014280570203517,
    3.993331278541853, 3.972377916067163, 3.951420407149274, 3.9304586749751764,
    3.9094926415407496, 3.888522227642987, 3.867547352872752, 3.846567935608102,
    3.8255838930082184, 3.8045951410079946, 3.7836015943133137, 3.7626031663970707,
    3.7415997694959837, 3.720591314608245, 3.699577711492065, 3.67855886866517,
    3.6575346934052955, 3.6365050917517574, 3.6154699685081457, 3.5944292272462155,
    3.5733827703110452, 3.552330498827524, 3.5312723127082606, 3.5102081106629672,
    3.4891377902094303, 3.468061247686124, 3.4469783782665733, 3.4258890759755576,
    3.4047932337072404, 3.383690743245338, 3.3625814952854247, 3.341465379459487,
    3.320342284362837, 3.2992120975835046, 3.2780747057342348, 3.2569299944872103,
    3.2357778486116433, 3.2146181520143626, 3.1934507877835516, 3.1722756382357806,
    3.151092584966487, 3.129901508904077, 3.1087022903677974, 3.0874948091295735,
    3.0662789444799814, 3.045054575298542, 3.023821580128546, 3.002579837256595,
    2.9813292247970833, 2.9600696207818364, 2.9388009032551223, 2.9175229503742925,
    2.8962356405162724, 2.8749388523901755, 2.853632465156285, 2.832316358551692,
    2.8109904130228593, 2.7896545098654086, 2.7683085313714306, 2.7469523609846327,
    2.7255858834636455, 2.7042089850538313, 2.6828215536679254, 2.6614234790758893,
    2.6400146531043265, 2.618594969845864, 2.597164325878879, 2.575722620497992,
    2.55426975595575, 2.532805637715925, 2.511330174718898, 2.489843279659581,
    2.4683448692783627, 2.4468348646655866, 2.4253131915800505, 2.4037797807820835,
    2.382234568381726, 2.3606774962025923, 2.339108512161982, 2.317527570667847,
    2.295934633033231, 2.274329667908812, 2.252712651734206, 2.2310835692087,
    2.2094424137821185, 2.187789188166522, 2.16612390486949, 2.144446586749719,
    2.1227572675957402, 2.101055992728534, 2.0793428196288715, 2.0576178185902263,
    2.0358810733981145, 2.014132682036766, 1.9923727574240322, 1.9706014281754625,
    1.9488188393985348, 1.9270251535179914, 1.9052205511333309, 1.8834052319094672,
    1.8615794155016419, 1.839743342515657, 1.8178972755045737, 1.7960415000030054,
    1.7741763256001841, 1.7523020870530075, 1.7304191454402849, 1.7085278893594555,
    1.6866287361670638, 1.6647221332643034, 1.6428085594289952, 1.6208885261953556,
    1.5989625792829905, 1.5770313000765408, 1.5550953071574578, 1.533155257889419,
    1.511211850058908, 1.489265823572551, 1.467317962212799, 1.4453690954535978,
    1.423420100337727, 1.4014719034174978, 1.3795254827605752, 1.3575818700226865,
    1.3356421525890363, 1.3137074757862874, 1.2917790451669784, 1.2698581288683268,
    1.2479460600473689, 1.2260442393944502, 1.2041541377270988, 1.1822772986663848,
    1.1604153413978766, 1.1385699635193738, 1.1167429439776255, 1.0949361460962794,
    1.073151520697384, 1.051391109318769, 1.0296570475297064, 1.0079515683472993,
    0.9862770057560655, 0.9646357983332847, 0.9430304929826809, 0.9214637487790875,
    0.8999383409268039, 0.8784571648343753, 0.8570232403086333, 0.8356397158708483,
    0.8143098731979295, 0.7930371316916733, 0.7718250531790977, 0.7506773467470106,
    0.729597873713984, 0.7085906527430115, 0.6876598650981656, 0.6668098600486855,
    0.6460451604239688, 0.6253704683230387, 0.6047906709821419, 0.5843108468041984,
    0.5639362715539468, 0.5436724247226851, 0.5235249960666211, 0.5034998923229458,
    0.4836032441078181, 0.46384141300059645, 0.44422099881871735, 0.4247488470877568,
    0.4054320567113225, 0.3862779878455237, 0.36729426998292186, 0.3484888102509587,
    0.3298698019300022, 0.31144573319629115, 0.29322539609517456, 0.27521789575021793,
    0.25743265981385977, 0.23987944816547807, 0.22256836286287243, 0.20550985835331695,
    0.18871475195053192, 0.1721942345840572, 0.1559598818277136, 0.14002366521398968,
    0.12439796384140567, 0.10909557628206695, 0.09412973279682949, 0.07951410786569615,
    0.06526283304125328, 0.05139051013319306, 0.03791222473215194, 0.02484356008133396,
    0.012200611304609683, 0.0, -0.011741110792286272, -0.023005001237875133,
    -0.03377337896266192, -0.044027362903757104, -0.05374746674679532, -0.062913581939175,
    -0.07150496026854249, -0.0795001959955487, -0.0868772075296224, -0.09361321863622143,
    -0.0996847391637153, -0.10506754527776088, -0.1097366591907176, -0.11366632837333177,
    -0.11683000423560182, -0.11920032026339697, -0.12074906959707321, -0.12144718203797962,
    -0.1212647004683989, -0.12017075667010309, -0.11813354652633958, -0.11512030459168558,
    -0.11109727801382538, -0.10602969979090943, -0.0998817613477582, -0.09261658441375722,
    -0.08419619218487519, -0.07458147975180775, -0.06373218377580508, -0.05160685139330612,
    -0.038162808330032105, -0.023356126204729002, -0.007141589002275125, 0.010527341304637011,
    0.02969856000650953, 0.05042135580253914, 0.07274644786292393, 0.09672602383081687,
    0.12241377878734531, 0.14986495520363113, 0.17913638390436212, 0.21028652606802786,
    0.24337551628953033, 0.27846520673152925, 0.31561921239144997, 0.35490295751178697,
    0.39638372316194354, 0.440130696020577, 0.4862150183880352, 0.534709839459249,
    0.5856903678881209, 0.639233925675193, 0.6954200034111812, 0.7543303169096499,
    0.8160488652629801, 0.8806619903565499, 0.9482584378768641, 1.0189294198502976,
    1.0927686787498594, 1.169872553208402, 1.2503400453775344, 1.3342728899724445,
    1.421775625043851, 1.512955664519156, 1.607923372556018, 1.7067921397524837,
    1.809678461258895, 1.9167020168379292, 2.027985752920086, 2.1436559667032107,
    2.263842392345663, 2.388678289304104, 2.518300532867808, 2.65284970694291,
    2.792470199141111, 2.9373102982286756, 3.0875222939929783, 3.243262579585027,
    3.404691756397979, 3.5719747415429537, 3.7452808779849276, 3.924784047403083,
    4.110662785841304, 4.303100402216267, 4.502285099752101, 4.7084101004121255,
    4.921673772400109, 5.142279760804839, 5.370437121463859, 5.6063604581238815,
    5.850270062977154, 6.102392060655201, 6.36295855576287, 6.632207784037965,
    6.910384267223564, 7.197738971742135, 7.494529471262956, 7.8010201132560315,
    8.117482189628388, 8.444194111540481, 8.781441588503228, 9.129517811857898,
    9.488723642744208, 9.8593678046639, 10.241767080749899, 10.636246515853795,
    11.04313962356669, 11.462788598291588, 11.895544532488028, 12.341767639212504,
    12.801827480081469, 13.276103198786048, 13.764983760291138, 14.268868195854987,
    14.788165854007092, 15.323296657627939, 15.87469136727454, 16.442791850901845,
    17.02805136013201, 17.63093481322682, 18.251919084924285, 18.89149330330115,
    19.55015915382981, 20.22843119080032, 20.926837156281877, 21.64591830680469,
    22.386229747943624, 23.148340776993095, 23.93283523392468, 24.740311860823265,
    25.571384670004917, 26.426683321020043, 27.306853506754678, 28.212557348844683,
    29.144473802622905, 30.103299071827145, 31.089747033297755, 32.104549671903385,
    33.1484575259365, 34.22224014322514, 35.326686548216635, 36.46260572029155,
    37.630827083572726, 38.83220100850346, 40.06759932546988, 41.33791585075479,
    42.644066925113236, 43.986991965266206, 45.367654028621054, 46.787040391526354,
    48.24616314138421, 49.74605978294526, 51.28779385911939, 52.87245558664793,
    54.50116250698314, 56.175060152736854, 57.89532273006369, 59.66315381735201,
    61.479787080610976, 63.34648700594127, 65.26454964949563, 67.23530340533928,
    69.26010979162844, 71.3403642555431, 73.4774969974082, 75.67297381445961,
    77.92829696471377, 80.24500605141137, 82.62467892852297, 85.06893262780468,
    87.57942430791489, 90.15785222610712, 92.80595673302653, 95.5255212911571,
    98.31837351746691, 101.18638625082461, 104.13147864476493, 107.1556172861941,
    110.26081734064954, 113.4491437247267, 116.72271230631651, 120.08369113330065,
    123.53430169136773, 127.0768201916388, 130.71357888878964, 134.44696743039094,
    138.2794342381926, 142.21348792209452, 146.25169872757695, 150.3967000173599,
    154.65118978810085, 159.01793222294435, 163.49975928075614, 168.09957232290787,
    172.8203437784756, 177.66511884875848, 182.6370172520305, 187.73923500945762,
    192.97504627314956, 198.347805197322, 203.86094785356957, 209.51799419128872,
    215.32255004428612, 221.27830918466103, 227.38905542505645, 233.65866477039833,
    240.09110762028834, 246.69045102321095, 253.4608609837736, 260.40660482420805,
    267.5320536013854, 274.8416845806536, 282.3400837677939, 290.0319485004671,
    297.9220901005203, 306.0154365885617, 314.317035462268, 322.8320565398769,
    331.56579487040034, 340.5236737120968, 349.7112475807755, 359.1342053695754,
    368.79837354184815, 378.7097193988611, 388.8743544240471, 399.2985377055614,
    409.98867943898694, 420.9513445120121, 432.19325617300444, 443.7212997854124,
    455.5425266699703, 467.66415803676546, 480.0935890092125, 492.83839274208907,
    505.9063246357967, 519.3053266490596, 533.0435317123656, 547.1292682444428,
    561.5710647741812, 576.3776546704258, 591.5579809821153, 607.121201391352,
    623.0766932819664, 639.4340589262783, 656.203130792769, 673.3939769774371,
    691.0169067617327, 709.0824762999396, 727.6014944390321, 746.585028674046,
    766.0444112420689, 785.991245358079, 806.4374115958843, 827.3950744174874,
    848.8766888543399, 870.8950073439293, 893.4630867253231, 916.5942953973121,
    940.3023206428688, 964.6011761238115, 989.5052095495142, 1015.0291105237319,
    1041.187918573609, 1067.9970313650415, 1095.4722131087349, 1123.6296031612699,
    1152.4857248257206, 1182.0574943563884, 1212.3622301723083, 1243.417662284402,
    1275.24194194109, 1307.8536514974646, 1341.271814513113, 1375.5159060838255,
    1410.6058634126218, 1446.5620966254996, 1483.405499837601, 1521.1574624755083,
    1559.839880861511, 1599.4751700659383, 1640.0862760336006, 1681.6966879907086,
    1724.3304511386732, 1768.0121796413137, 1812.767069912299, 1858.6209142095845,
    1905.6001145439732, 1953.7316969089609, 2003.0433258391758, 2053.563319305049,
    2105.320663951277, 2158.34503068706, 2212.6667906361267, 2268.31703145472,
    2325.3275740260924, 2383.730989539974, 2443.5606169659395, 2504.8505809296416,
    2567.6358100010534, 2631.9520554042942, 2697.8359101584892, 2765.324828659669,
    2834.45714671373, 2905.2721020306853, 2977.8098551909256, 3052.11151109405,
    3128.21914090147, 3206.175804483999, 3286.0255733858676, 3367.8135543171115,
    3451.5859131863117, 3537.3898996859293, 3625.2738724430733, 3715.287324748319,
    3807.4809108759973, 3901.9064730093514, 3998.6170687842637, 4097.666999465879,
    4199.111838772289, 4303.008462360242, 4409.415077987888, 4518.391256369878,
    4629.997962740842, 4744.297589143091, 4861.353987455265, 4981.23250317875,
    5104.000009998944, 5229.724945139349, 5358.477345526164, 5490.3288847821195,
    5625.352911068331, 5763.624485793305, 5905.220423209181, 6050.219330914977,
    6198.7016512878145, 6350.749703863091, 6506.44772868503, 6665.881930650036,
    6829.140524864986, 6996.313783043892, 7167.494080966389, 7342.775947022025,
    7522.25611186541, 7706.033559206968, 7894.209577765529, 8086.887814408958,
    8284.174328509614, 8486.177647542716, 8693.0088239552, 8904.781493334493,
    9121.611933906393, 9343.619127392123, 9570.924821255832, 9803.653592373512,
    10041.93291215607, 10285.89321315939, 10535.667957214779, 10791.39370511495,
    11053.210187890038, 11321.260379710333, 11595.690572452355, 11876.650451965705,
    12164.293176079771, 12458.775454389406, 12760.25762985965, 13068.9037622914,
    13384.881713689283, 13708.363235575616, 14039.52405829416, 14378.543982348438,
    14725.60697182146, 15080.901249923043, 15444.61939671362, 15816.958449053569,
    16198.12000282798, 16588.310317499272, 16987.740423039275, 17396.626229295427,
    17815.188637845873, 18243.653656399278, 18682.252515797958, 19131.221789681913,
    19590.80351687499, 20061.245326554283, 20542.800566265232, 21035.72843284784,
    21540.29410633843, 22056.768886915354, 22585.430334956898, 23126.56241428126,
    23680.45563864167, 24247.407221548638, 24827.72122949578, 25421.708738665566,
    26029.687995192926, 26651.984579068507, 27288.931571761954, 27940.869727650675,
    28608.14764933935, 29291.12196695735, 29990.157521525394, 30705.627552481306,
    31437.913889460287, 32187.40714842514, 32954.50693224357, 33739.62203581489,
    34543.1706558464, 35365.580605386036, 36207.289533217896, 37068.745148229376,
    37950.405448863996, 38852.738957771995, 39776.22496177791, 40721.35375728425,
    41688.62690123251, 42678.55746774924, 43691.67031060233, 44728.50233160064,
    45789.60275507001, 46875.53340854134, 47986.86900979269, 49124.19746038721,
    50288.120145852205, 51479.25224265154, 52698.22303210081, 53945.67622138429,
    55222.27027183258, 56528.67873462272, 57865.59059407097, 59233.71061868525,
    60633.75972015497, 62066.4753204554, 63532.6117272476, 65032.94051776405,
    66568.25093136636, 68139.35027097353, 69747.06431355895, 71392.23772991798,
    73075.7345139188, 74798.43842144444, 76561.25341924804, 78365.10414394208,
    80210.93637134791, 82099.71749644238, 84032.43702413405, 86010.10707111706,
    88033.76287904943, 90104.46333930785, 92223.29152958417, 94391.35526258296,
    96609.78764709728, 98879.74766173796, 101202.42074159844, 103579.01937815097,
    106010.78373266397, 108498.98226344989, 111044.91236725153, 113649.90103508117,
    116315.30552284328, 119042.51403706425, 121832.94643607482, 124688.05494698892,
    127609.32489882987, 130598.27547217374, 133656.4604656708, 136785.46907983074,
    139986.9267184563, 143262.49580811657, 146613.87663607308, 150042.8082070616,
    153551.06911936082, 157140.4784605768, 160812.89672358078, 164570.22674305894,
    168414.4146531322, 172347.45086651383, 176371.37107569727, 180488.25727665483,
    184700.2388155622, 189009.49345905907, 193418.24848856946, 197928.78181923,
    202543.42314396452, 207264.55510327828, 212094.614481343, 217036.09342895605,
    222091.5407139873, 227263.56299991318, 232554.82615307922, 237968.05657932864,
    243506.04259064753, 249171.63580251214, 254967.75256260816, 260897.3754116369,
    266963.5545769203, 273169.4094995323, 279518.13039572054, 286012.9798533663,
    292657.29446428217, 299454.48649314017, 306408.0455838448, 313521.5405042019,
    320798.6209297194, 328243.019267432, 335858.55252063565, 343649.12419543933,
    351618.72625008534, 359771.44108797185, 368111.4435953713, 376643.0032248364,
    385370.48612530436, 394298.35731996305, 403431.1829329193, 412773.63246578135,
    422330.4811252596, 432106.6122029152, 442107.01950824383, 452336.80985625635,
    462801.205610795, 473505.5472848212, 484455.2961989335, 495656.03719944105,
    507113.48143728974, 518833.46920922474, 530821.9728625661, 543085.099765005,
    555629.0953408993, 568460.3461755151, 581585.3831887593, 595010.884879941,
    608743.6806451317, 622790.7541687676, 637159.2468911349, 651856.4615534174,
    666889.8658220676, 682267.0959942279, 697995.9607860422, 714084.4452056908,
    730540.7145130213, 747373.1182677418, 764590.1944681011, 782200.673782114,
    800213.4838733743, 818637.7538235439, 837482.8186537168, 856758.2239468034,
    876473.7305732309, 896639.3195222409, 917265.1968411165, 938361.7986847874,
    959939.7964782129, 982010.1021941017, 1004583.8737485141, 1027672.5205169502,
    1051287.7089736569, 1075441.3684568305, 1100145.697062572, 1125413.1676704206,
    1151256.5341034345, 1177688.8374257316, 1204723.4123806527, 1232373.893972595,
    1260654.2241957362, 1289578.6589129455, 1319161.7748881343, 1349418.4769755714,
    1380364.0054695671, 1412013.9436181216, 1444384.2253042066, 1477491.1428983219,
    1511351.355286251, 1545981.8960758175, 1581400.1819866528, 1617624.0214270724,
    1654671.623262119, 1692561.6057771528, 1731313.0058412342, 1770945.2882747669,
    1811478.3554259809, 1852932.5569607732, 1895328.6998708053, 1938688.0587045858,
    1983032.3860265228, 2028383.923109062, 2074765.410862944, 2122200.1010110523,
    2170711.76751112, 2220324.7182328682, 2271063.806895268, 2322954.44526956,
    2376022.615654116, 2430294.883627041, 2485798.4110827083, 2542560.969558609,
    2600610.953858766, 2659977.395980531, 2720689.9793513254, 2782779.0533822468,
    2846275.6483456423, 2911211.4905836447, 2977619.0180552606, 3045531.3962293295,
    3114982.534331091, 3186007.1019502664, 3258640.546018461, 3332919.1081643673,
    3408879.842454907, 3486560.6335309786, 3566000.2151465886, 3647238.1891201204,
    3730315.0447071497, 3815272.1784039377, 3902151.9141912386, 3990997.5242281295,
    4081853.250005965, 4174764.3239723616, 4269776.9916360015, 4366938.534162629,
    4466297.29147321, 4567902.685855484, 4671805.246099978, 4778056.632172502,
    4886709.6604347, 4997818.3294249, 5111437.846211782, 5227624.653333211,
    5346436.456333648, 5467932.251913034, 5592172.3567008255, 5719218.436669122,
    5849133.5371986795, 5981982.113812733, 6117830.063593077, 6256744.757293576,
    6398795.0721667325, 6544051.425518629, 6692585.809008954, 6844471.823712167,
    6999784.715956771, 7158601.413960082, 7321000.565275626, 7487062.575071743,
    7656869.645259356, 7830505.814487797, 8008056.9990281, 8189611.0345628485,
    8375257.718903341, 8565088.855654027, 8759198.298845377, 8957681.998556737,
    9160638.047550552, 9368166.728941021, 9580370.564919513, 9797354.366560277,
    10019225.284730565, 10246092.862128912, 10478069.086477378, 10715268.444892624,
    10957807.979462042, 11205807.344051888, 11459388.862373834, 11718677.587338781,
    11983801.361725606, 12254890.880194155, 12532079.752672443, 12815504.569147611,
};

inline constexpr double kGridDigamma[kGridSize] = {
    -1000.5755719318103, -980.0452045732928, -959.9363310644629, -940.2402979664068,
    -920.9486294975729, -902.0530238863886, -883.5453497987668, -865.4176428389546,
    -847.6621021222185, -830.2710869178977, -813.2371133613686, -796.5528512335226,
    -780.2111208063548, -764.2048897533169, -748.5272701231039, -733.1715153755611,
    -718.1310174784529, -703.3993040638329, -688.9700356427925, -674.8370028773955,
    -660.9941239086144, -647.4354417391298, -634.1551216698593, -621.1474487891176,
    -608.4068255133182, -595.9277691781718, -583.704909679335, -571.7329871614953,
    -560.0068497549045, -548.521451358374, -537.2718494677922, -526.2532030492195,
    -515.4607704556488, -504.88990738653854, -494.5360648892306, -484.39478740140464,
    -474.4617108337188, -464.7325606918158, -455.20315023688005, -445.8693786839636,
    -436.72722943729775, -427.7727683618342, -419.0021420902732, -410.4115763648445,
    -401.99737441313596, -393.7559153572635, -385.68365265570174, -377.77711257710473,
    -370.0328927054563, -362.44766047591224, -355.01815174070055, -347.74116936446296,
    -340.61358184843607, -333.63232198287415, -326.7943855271409, -320.0968299168973,
    -313.53677299783044, -307.1113917853797, -300.81792124992324, -294.6536531269067,
    -288.61593475139836, -282.7021679165702, -276.909807755616, -271.23636164661957,
    -265.67938813990924, -260.2364959074311, -254.90534271369188, -249.68363440782866,
    -244.56912393636838, -239.5596103762575, -234.65293798774178, -229.84699528668958,
    -225.13971413596107, -220.52906885542885, -216.01307535027098, -211.58979025715894,
    -207.25731010797313, -203.01377051068795, -198.85734534707024, -194.78624598685036,
    -190.7987205180245, -186.89305299295805, -183.06756268996665, -179.32060339005395,
    -175.650562668499, -172.05586120098658, -168.53495208397888, -165.0863201690435,
    -161.70848141084215, -158.3999822285072, -155.15939888012733, -151.9853368500728,
    -148.87643024889937, -145.83134122557036, -142.84875939174444, -139.92740125788254,
    -137.0660096809289, -134.26335332333113, -131.51822612316508, -128.82944677513638,
    -126.19585822223657, -123.61632715783301, -121.08974353798064, -118.61502010374397,
    -116.1910919133247, -113.81691588379351, -111.49147034222791, -109.21375458606452,
    -106.98278845247569, -104.79761189658487, -102.6572845783405, -100.56088545786868,
    -98.50751239913274, -96.49628178172743, -94.52632812064174, -92.59680369382576,
    -90.70687817740271, -88.85573828836758, -87.0425874346199, -85.2666453721797,
    -83.52714786943838, -81.82334637830168, -80.15450771208133, -78.5199137299985,
    -76.91886102816206, -75.35066063688927, -73.81463772423898, -72.31013130562863,
    -70.83649395941171, -69.39309154829174, -67.97930294645415, -66.59451977229807,
    -65.23814612665284, -63.90959833636736, -62.60830470316116, -61.33370525762983,
    -60.08525151829841, -58.86240625561941, -57.66464326081421, -56.49144711945744,
    -55.34231298970825, -54.21674638509194, -53.11426296173918, -52.034388309991215,
    -50.97665775028103, -49.940616133203285, -48.92581764368649, -47.93182560918367,
    -46.95821231179851, -46.0045588042667, -45.07045472971312, -44.15549814510714,
    -43.25929534834066, -42.381460708853915, -41.52161650173672, -40.67939274523368,
    -39.85442704158316, -39.046364421122355, -38.25485718959056, -37.4795647785657,
    -36.72015359896954, -35.97629689757847, -35.24767461647864, -34.533973255404526,
    -33.83488573690226, -33.15011127425934, -32.47935524214436, -31.822329049901025,
    -31.17875001744187, -30.54834125368874, -29.930831537507437, -29.32595520108568,
    -28.733452015704238, -28.153067079851994, -27.584550709637316, -27.027658331448173,
    -26.48215037681549, -25.94779217943408, -25.424353874297374, -24.911610298902545,
    -24.40934089648346, -23.917329621230337, -23.43536484545506, -22.96323926866263,
    -22.500749828489706, -22.04769761347188, -21.603887777602633, -21.16912945664702,
    -20.743235686174476, -20.326023321275578, -19.9173129579282, -19.516928855979746,
    -19.124698863712105, -18.74045434395737, -18.364030101732453, -17.99526431336179,
    -17.633998457057835, -17.280077244929448, -16.933348556389433, -16.59366337293244,
    -16.26087571425559, -15.934842575694434, -15.615423866947493, -15.302482352063313,
    -14.995883590664272, -14.695495880382213, -14.401190200481171, -14.112840156643266,
    -13.830321926894161, -13.553514208644964, -13.282298166828122, -13.01655738310504,
    -12.756177806123896, -12.501047702806423, -12.251057610642794, -12.00610029097447,
    -11.766070683244893, -11.530865860198755, -11.300384984010526, -11.074529263323726,
    -10.853201911182593, -10.636308103838116, -10.423754940411076, -10.215451403394697,
    -10.011308319980218, -9.811238324188833, -9.615155819793888, -9.422976944017387,
    -9.234619531985526, -9.05000308192789, -8.869048721105509, -8.69167917245326,
    -8.517818721922172, -8.347393186507869, -8.180329882951263, -8.016557597098151,
    -7.856006553904574, -7.698608388074883, -7.544296115320091, -7.393004104223914,
    -7.244668048704463, -7.099224941059545, -6.956613045584022, -6.816771872747631,
    -6.67964215392208, -6.5451658166463655, -6.41328596041943, -6.2839468330096055,
    -6.157093807270342, -6.032673358451981, -5.9106330419995565, -5.790921471826631,
    -5.673488299055596, -5.558284191214786, -5.445260811883081, -5.334370800772795,
    -5.225567754241719, -5.118806206225516, -5.0140416095816365, -4.911230317836153,
    -4.81032956732507, -4.711297459721701, -4.614092944941991, -4.518675804419637,
    -4.425006634743087, -4.333046831646586, -4.24275857434751, -4.154104810222478,
    -4.067049239814671, -3.9815563021650666, -3.8975911604602302, -3.8151196879896214,
    -3.73410845440527, -3.654524712276923, -3.5763363839358173, -3.4995120486002786,
    -3.4240209297765842, -3.349832882928463, -3.276918383408822, -3.2052485146473395,
    -3.1347949565876263, -3.065529974367842, -2.9974264072386667, -2.9304576577126364,
    -2.8645976809390157, -2.7998209742983353, -2.7361025672110024, -2.6734180111543147,
    -2.6117433698824195, -2.551055209843819, -2.4913305907910863, -2.4325470565776466,
    -2.3746826261364817, -2.317715784635791, -2.261625474806673, -2.206391088438093,
    -2.151992458034411, -2.098409848630913, -2.0456239497628785, -1.993615867583802,
    -1.9423671171285612, -1.8918596147173654, -1.8420756704964687, -1.7929979811117642,
    -1.7446096225114143, -1.6968940428739092, -1.649835055657941, -1.6034168327706813,
    -1.557623897851138, -1.5124411196653638, -1.46785370561047, -1.423847195324453,
    -1.3804074543989908, -1.337520668192494, -1.2951733357407706, -1.2533522637628511,
    -1.2120445607595611, -1.1712376312025932, -1.130919169811934, -1.0910771559195782,
    -1.0516998479176425, -1.0127757777890198, -0.974293745718888, -0.9362428147854229,
    -0.8986123057282401, -0.8613917917931219, -0.8245710936517138, -0.7881402743949667,
    -0.7520896345991493, -0.7164097074634098, -0.6810912540178701, -0.6461252584013583,
    -0.6115029232079513, -0.5772156649015329, -0.5432551092976987, -0.5096130871123363,
    -0.476281629576297, -0.443252964115633, -0.410519510096877, -0.3780738746369483,
    -0.3459088484772503, -0.31401740192158545, -0.2823926808375471, -0.25102800272104286,
    -0.2199168528236754, -0.18905288034267728, -0.15842989467313415, -0.12804186172224713,
    -0.09788290028535705, -0.06794727848351531, -0.03822941026232691, -0.008723851951836824,
    0.020574701112820143, 0.049671417910237665, 0.07857133499131906, 0.1072793596778926,
    0.1358002732016586, 0.16413873378379462, 0.19229927965552387, 0.22028633202001768,
    0.24810419795598712, 0.2757570732633511, 0.30324904525140645, 0.33058409546990825,
    0.3577661023835291, 0.3847988439901734, 0.4116860003836323, 0.43843115626112633,
    0.4650378033762495, 0.49150934293790116, 0.5178490879557891, 0.5440602655331014,
    0.5701460191069989, 0.5961094106375483, 0.6219534227457844, 0.6476809608015762,
    0.6732948549619944, 0.6987978621609153, 0.7241926680505658, 0.7494818888957763,
    0.7746680734216803, 0.7997537046156519, 0.8247412014842282, 0.8496329207658283,
    0.8744311586000472, 0.8991381521543245, 0.923756081208806, 0.948287069700183,
    0.9727331872253359, 0.9970964505055901, 1.021378824812386, 1.0455822253551939,
    1.0697085186324593, 1.0937595237464006, 1.1177370136824556, 1.14164271655417,
    1.1654783168143366, 1.1892454564331452, 1.2129457360441431, 1.2365807160587685,
    1.2601519177502118, 1.2836608243073804, 1.3071088818596812, 1.3304975004733788,
    1.353828055120229, 1.3771018866191325, 1.4003203025514697, 1.423484578150834,
    1.446595957167829, 1.4696556527105915, 1.4926648480617046, 1.5156246974721217,
    1.5385363269327434, 1.5614008349242523, 1.5842192931458055, 1.606992747223183,
    1.629722217396952, 1.6524086991912126, 1.6750531640634823, 1.6976565600362374,
    1.720219812310656, 1.7427438238630473, 1.7652294760244829, 1.7876776290441065,
    1.8100891226365907, 1.8324647765142135, 1.8548053909039843, 1.8771117470502676,
    1.8993846077033243, 1.9216247175941776, 1.9438328038962205, 1.9660095766739312,
    1.9881557293190957, 2.01027193897489, 2.0323588669481993, 2.0544171591104927,
    2.0764474462876237, 2.0984503446388554, 2.120426456025443, 2.142376368369087,
    2.164300656000541, 2.186199879998675, 2.2080745885202764, 2.229925317120853,
    2.251752589066721, 2.2735569156386175, 2.2953387964270866, 2.3170987196199078,
    2.3388371622817545, 2.3605545906263674, 2.3822514602814016, 2.403928216546214,
    2.425585294642774, 2.447223119959882, 2.468842108290939, 2.49044266606539,
    2.512025190574089, 2.5335900701887226, 2.5551376845754614, 2.5766684049030455,
    2.5981825940454066, 2.6196806067790366, 2.641162789975231, 2.6626294827873327,
    2.684081016833175, 2.7055177163727877, 2.7269398984815694, 2.748347873219016,
    2.769741943793125, 2.7911224067206386, 2.812489551983186, 2.8338436631794943,
    2.8551850176737466, 2.8765138867401903, 2.8978305357041254, 2.9191352240793615,
    2.9404282057022164, 2.9617097288622083, 2.982980036429464, 3.0042393659789917,
    3.0254879499118776, 3.046726015573474, 3.06795378536871, 3.08917147687454,
    3.110379302949663, 3.131577471841561, 3.152766187290909, 3.173945648633485,
    3.19511605089957, 3.2162775849109764, 3.237430437375728, 3.258574790980447,
    3.279710824480552, 3.3008387127882677, 3.321958627058551, 3.3430707347729713,
    3.3641751998215765, 3.3852721825828445, 3.406361840001716, 3.4274443256658036,
    3.4485197898798043, 3.4695883797381444, 3.4906502391959475, 3.5117055091383165,
    3.532754327448011, 3.553796829071553, 3.574833146083769, 3.5958634077508713,
    3.616887740592041, 3.6379062684396115, 3.6589191124978617, 3.6799263914004356,
    3.700928221266472, 3.721924715755417, 3.742915986120603, 3.7639021412615965,
    3.784883287775343, 3.805859530006165, 3.826830970094603, 3.847797708025163,
    3.868759841672983, 3.8897174668494285, 3.910670677346681, 3.931619564981298,
    3.952564219636811, 3.9735047293053647, 3.9944411801284048, 4.015373656436483,
    4.036302240788144, 4.057227014007961, 4.078148055223725, 4.0990654419027885,
    4.119979249887623, 4.14088955343058, 4.1617964252278625, 4.182699936452783,
    4.20360015678825, 4.224497154458551, 4.2453909962604515, 4.266281747593574,
    4.287169472490145, 4.308054233644062, 4.328936092439332, 4.349815108977905,
    4.370691342106859, 4.391564849445036, 4.4124356874090545, 4.433303911238786,
    4.454169575022272, 4.47503273172007, 4.495893433189122, 4.516751730206047,
    4.537607672489976, 4.558461308724873, 4.579312686581356, 4.600161852738087,
    4.621008852902659, 4.641853731832055, 4.662696533352665, 4.683537300379859,
    4.704376074937161, 4.72521289817498, 4.746047810388966, 4.766880851037965,
    4.787712058761577, 4.808541471397354, 4.829369125997617, 4.85019505884592,
    4.87101930547317, 4.891841900673375, 4.912662878519097, 4.933482272376532,
    4.954300114920301, 4.975116438147919, 4.995931273393937, 5.016744651343818,
    5.037556602047476, 5.058367154932565, 5.07917633881747, 5.099984181924016,
    5.120790711889922, 5.141595955780977, 5.162399940102971, 5.18320269081337,
    5.204004233332733, 5.224804592555904, 5.24560379286296, 5.266401858129926,
    5.2871988117392705, 5.307994676590169, 5.32878947510856, 5.349583229256995,
    5.370375960544259, 5.391167690034819, 5.411958438358042, 5.432748225717241,
    5.453537071898531, 5.474324996279482, 5.495112017837612, 5.515898155158676,
    5.53668342644481, 5.557467849522488, 5.578251441850302, 5.599034220526613,
    5.619816202296999, 5.640597403561579, 5.661377840382179, 5.6821575284893235,
    5.702936483289124, 5.723714719869976, 5.744492253009154, 5.765269097179253,
    5.786045266554485, 5.806820775016872, 5.827595636162282, 5.848369863306349,
    5.869143469490285, 5.8899164674865405, 5.910688869804375, 5.931460688695292,
    5.952231936158374, 5.973002623945501, 5.993772763566455, 6.0145423662939335,
    6.03531144316844, 6.056080005003081, 6.0768480623882795, 6.097615625696353,
    6.118382705086036, 6.139149310506883, 6.159915451703586, 6.180681138220216,
    6.201446379404346, 6.2222111844111305, 6.2429755622072545, 6.263739521574838,
    6.284503071115241, 6.305266219252789, 6.326028974238435, 6.346791344153323,
    6.3675533369123025, 6.388314960267354, 6.409076221810946, 6.429837128979325,
    6.450597689055744, 6.471357909173603, 6.4921177963195555, 6.512877357336517,
    6.533636598926637, 6.554395527654204, 6.5751541499484745, 6.595912472106469,
    6.616670500295687, 6.637428240556777, 6.658185698806162, 6.678942880838577,
    6.699699792329601, 6.720456438838087, 6.741212825808583, 6.761968958573685,
    6.782724842356329, 6.803480482272069, 6.824235883331273, 6.844991050441292,
    6.865745988408592, 6.886500701940809, 6.907255195648812, 6.928009474048668,
    6.948763541563609, 6.969517402525943, 6.990271061178915, 7.011024521678555,
    7.03177778809546, 7.0525308644165525, 7.073283754546819, 7.09403646231097,
    7.114788991455119, 7.135541345648376, 7.156293528484445, 7.177045543483178,
    7.197797394092081, 7.218549083687819, 7.239300615577656, 7.260051993000893,
    7.280803219130271, 7.3015542970733245, 7.322305229873738, 7.343056020512648,
    7.363806671909934, 7.384557186925485, 7.405307568360416, 7.426057818958297,
    7.44680794140632, 7.467557938336464, 7.48830781232664, 7.509057565901783,
    7.529807201534956, 7.550556721648416, 7.5713061286146495, 7.592055424757407,
    7.6128046123526945, 7.633553693629759, 7.654302670772058, 7.6750515459181825,
    7.6958003211628006, 7.716548998557544, 7.737297580111895, 7.758046067794067,
    7.778794463531831, 7.7995427692133665, 7.820290986688062, 7.841039117767314,
    7.861787164225321, 7.882535127799826, 7.903283010192886, 7.924030813071592,
    7.944778538068793, 7.965526186783803, 7.98627376078308, 8.007021261600913,
    8.027768690740075, 8.04851604967247, 8.069263339839777, 8.090010562654056,
    8.110757719498375, 8.131504811727389, 8.152251840667928, 8.172998807619578,
    8.19374571385523, 8.214492560621636, 8.235239349139936, 8.255986080606196,
    8.276732756191917, 8.297479377044537, 8.318225944287935, 8.338972459022902,
    8.359718922327625, 8.380465335258153, 8.401211698848837, 8.421958014112798,
    8.442704282042342, 8.4634505036094, 8.484196679765944, 8.504942811444394,
    8.525688899558027, 8.546434945001359, 8.567180948650535, 8.587926911363718,
    8.608672833981437, 8.62941871732697, 8.650164562206683, 8.670910369410382,
    8.69165613971166, 8.712401873868215, 8.733147572622196, 8.753893236700508,
    8.774638866815126, 8.795384463663412, 8.816130027928402, 8.836875560279104,
    8.8576210613708, 8.8783665318453, 8.899111972331252, 8.919857383444382,
    8.940602765787778, 8.961348119952147, 8.982093446516057, 9.002838746046208,
    9.023584019097656, 9.044329266214058, 9.065074487927918, 9.085819684760791,
    9.106564857223535, 9.127310005816515, 9.148055131029816, 9.168800233343468,
    9.18954531322764, 9.210290371142849, 9.231035407540157, 9.251780422861355,
    9.27252541753918, 9.293270391997465, 9.314015346651358, 9.334760281907469,
    9.355505198164062, 9.376250095811233, 9.396994975231054, 9.417739836797764,
    9.438484680877913, 9.459229507830521, 9.479974318007246, 9.500719111752515,
    9.521463889403691, 9.542208651291208, 9.56295339773871, 9.583698129063206,
    9.604442845575186, 9.625187547578774, 9.645932235371843, 9.66667690924615,
    9.687421569487467, 9.708166216375695, 9.728910850184986, 9.749655471183871,
    9.770400079635357, 9.791144675797058, 9.811889259921298, 9.832633832255214,
    9.853378393040881, 9.87412294251539, 9.894867480910978, 9.915612008455101,
    9.93635652537055, 9.957101031875549, 9.977845528183826, 9.998590014504737,
    10.01933449104333, 10.04007895800044, 10.06082341557279, 10.081567863953055,
    10.10231230332996, 10.123056733888347, 10.143801155809271, 10.164545569270068,
    10.185289974444427, 10.20603437150248, 10.22677876061086, 10.24752314193278,
    10.268267515628104, 10.289011881853408, 10.309756240762063, 10.330500592504285,
    10.3512449372272, 10.371989275074927, 10.392733606188614, 10.41347793070652,
    10.43422224876406, 10.454966560493867, 10.475710866025857, 10.496455165487275,
    10.517199459002754, 10.53794374669437, 10.558688028681688, 10.579432305081824,
    10.600176576009481, 10.620920841577021, 10.641665101894487, 10.662409357069663,
    10.68315360720813, 10.703897852413288, 10.724642092786429, 10.74538632842675,
    10.766130559431422, 10.786874785895618, 10.807619007912555, 10.828363225573542,
    10.849107438968005, 10.86985164818354, 10.890595853305943, 10.911340054419245,
    10.932084251605762, 10.952828444946109, 10.973572634519249, 10.994316820402528,
    11.015061002671699, 11.03580518140096, 11.056549356662991, 11.077293528528973,
    11.098037697068632, 11.118781862350257, 11.139526024440736, 11.160270183405588,
    11.18101433930898, 11.20175849221377, 11.222502642181519, 11.243246789272524,
    11.263990933545848, 11.284735075059338, 11.305479213869656, 11.3262233500323,
    11.346967483601626, 11.36771161463088, 11.388455743172203, 11.409199869276684,
    11.429943992994346, 11.45068811437419, 11.471432233464219, 11.492176350311437,
    11.512920464961896, 11.533664577460693, 11.554408687852003, 11.575152796179092,
    11.595896902484343, 11.616641006809266, 11.637385109194513, 11.658129209679911,
    11.678873308304459, 11.69961740510637, 11.720361500123056, 11.741105593391174,
    11.761849684946618, 11.782593774824548, 11.803337863059413, 11.82408194968494,
    11.84482603473417, 11.865570118239466, 11.88631420023252, 11.907058280744389,
    11.927802359805476, 11.948546437445568, 11.969290513693839, 11.990034588578858,
    12.01077866212862, 12.031522734370538, 12.052266805331461, 12.073010875037689,
    12.093754943514975, 12.11449901078856, 12.135243076883151, 12.155987141822955,
    12.176731205631677, 12.19747526833254, 12.21821932994829, 12.238963390501207,
    12.259707450013108, 12.280451508505367, 12.301195565998912, 12.321939622514256,
    12.342683678071477, 12.363427732690246, 12.384171786389832, 12.4049158391891,
    12.425659891106541, 12.446403942160256, 12.467147992367979, 12.487892041747077,
    12.50863609031456, 12.529380138087097, 12.550124185081005, 12.570868231312268,
    12.591612276796546, 12.61235632154917, 12.633100365585168, 12.65384440891925,
    12.674588451565826, 12.695332493539011, 12.71607653485263, 12.73682057552022,
    12.757564615555053, 12.778308654970113, 12.799052693778126, 12.819796731991557,
    12.840540769622606, 12.861284806683237, 12.88202884318516, 12.902772879139844,
    12.923516914558524, 12.944260949452199, 12.965004983831658, 12.985749017707452,
    13.006493051089922, 13.027237083989197, 13.047981116415192, 13.068725148377633,
    13.08946917988603, 13.11021321094971, 13.130957241577798, 13.151701271779235,
    13.172445301562789, 13.193189330937033, 13.213933359910373, 13.234677388491036,
    13.255421416687085, 13.27616544450642, 13.296909471956774, 13.317653499045718,
    13.338397525780676, 13.359141552168913, 13.379885578217548, 13.400629603933556,
    13.421373629323764, 13.44211765439486, 13.462861679153391, 13.483605703605782,
    13.504349727758317, 13.52509375161715, 13.54583777518831, 13.566581798477701,
    13.587325821491115, 13.608069844234214, 13.628813866712546, 13.64955788893155,
    13.670301910896542, 13.691045932612749, 13.711789954085273, 13.732533975319116,
    13.753277996319179, 13.774022017090259, 13.794766037637062, 13.815510057964191,
};

}  // namespace dmr_test
