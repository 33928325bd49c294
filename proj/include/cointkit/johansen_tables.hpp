#pragma once

// Generated by tools/gen_johansen_tables (reps=200000, steps=1000, seed=20240611).
// Quantiles of the simulated limiting null distributions of the Johansen
// trace and maximum-eigenvalue statistics. Do not edit by hand.

#include <array>

namespace cointkit::detail {

inline constexpr int kJohansenMaxDim = 12;

// Upper-tail probabilities P(stat > q) of each tabulated quantile.
inline constexpr std::array<double, 25> kJohansenTailProbs = {
    0.9990, 0.9950, 0.9900, 0.9750, 0.9500, 0.9000, 0.8500, 0.8000, 0.7500, 0.7000, 0.6000, 0.5000, 0.4000, 0.3000, 0.2500, 0.2000, 0.1500, 0.1000, 0.0750, 0.0500, 0.0250, 0.0100, 0.0050, 0.0025, 0.0010,};

// [case - 1][0 = trace, 1 = max-eigen][m - 1][tail prob index]
inline constexpr double kJohansenQuantiles[5][2][12][25] = {
  {  // case 1
    {  // trace
      {0.0000, 0.0001, 0.0002, 0.0014, 0.0059, 0.0235, 0.0539, 0.0961, 0.1517, 0.2191, 0.3893, 0.6088, 0.8987, 1.2929, 1.5605, 1.8943, 2.3375, 2.9787, 3.4602, 4.1384, 5.3033, 6.9993, 8.2248, 9.5328, 11.2906},
      {0.7256, 1.0458, 1.2468, 1.6167, 2.0068, 2.5484, 2.9798, 3.3690, 3.7220, 4.0726, 4.7615, 5.4802, 6.2855, 7.2362, 7.8126, 8.4917, 9.3255, 10.4792, 11.2589, 12.3293, 14.1288, 16.3810, 17.9842, 19.6253, 21.7236},
      {4.5096, 5.5893, 6.1811, 7.1032, 8.0146, 9.1651, 10.0270, 10.7536, 11.4100, 12.0285, 13.2107, 14.4062, 15.6853, 17.1389, 17.9786, 18.9633, 20.1571, 21.7407, 22.7944, 24.2241, 26.5650, 29.5027, 31.5594, 33.7012, 36.1200},
      {12.2920, 14.0489, 15.0523, 16.5910, 18.0012, 19.8044, 21.0726, 22.1651, 23.1247, 24.0172, 25.6689, 27.3055, 29.0226, 30.9806, 32.0975, 33.3692, 34.9113, 36.9263, 38.2664, 40.0720, 42.9437, 46.5744, 49.1365, 51.5401, 54.2867},
      {23.9264, 26.5145, 27.9559, 30.0267, 32.0039, 34.4204, 36.1266, 37.5352, 38.7827, 39.9249, 42.0718, 44.1682, 46.3539, 48.7621, 50.1584, 51.7208, 53.5944, 56.0394, 57.6863, 59.8520, 63.2320, 67.3731, 70.3806, 73.1925, 76.6013},
      {39.3577, 42.7766, 44.5949, 47.4821, 49.9938, 53.0298, 55.1539, 56.9046, 58.4350, 59.8438, 62.4578, 64.9772, 67.5834, 70.4541, 72.0957, 73.9551, 76.2062, 79.0886, 80.9448, 83.4728, 87.4200, 92.2355, 95.5489, 98.7221, 102.2934},
      {58.6386, 63.1164, 65.4487, 68.8197, 71.8681, 75.5283, 78.0904, 80.1652, 82.0134, 83.6780, 86.7403, 89.7150, 92.7491, 96.1187, 98.0195, 100.1540, 102.7106, 106.0318, 108.1839, 111.0878, 115.5889, 121.0171, 124.8203, 128.2418, 132.6119},
      {81.7547, 87.3044, 90.0111, 94.0089, 97.6305, 101.9493, 104.9820, 107.3995, 109.4931, 111.4117, 114.9464, 118.3498, 121.8556, 125.7234, 127.8865, 130.3372, 133.2592, 136.9892, 139.4130, 142.6140, 147.5414, 153.6332, 157.9840, 162.1527, 167.2542},
      {109.1196, 115.5534, 118.6398, 123.2826, 127.4361, 132.3435, 135.7616, 138.4576, 140.8399, 143.0578, 147.0794, 150.9565, 154.8797, 159.1621, 161.5756, 164.3667, 167.6099, 171.7438, 174.4025, 177.8785, 183.4885, 190.1787, 194.7675, 199.1456, 204.3539},
      {140.7628, 147.6331, 151.1539, 156.3803, 161.0195, 166.5205, 170.3545, 173.4706, 176.1681, 178.6406, 183.1653, 187.4425, 191.7965, 196.5370, 199.1837, 202.2063, 205.7789, 210.3167, 213.2885, 217.1805, 223.3780, 230.4473, 235.6799, 240.4157, 246.2898},
      {175.6286, 183.7161, 187.3577, 193.2339, 198.5308, 204.6884, 208.9382, 212.3645, 215.3357, 218.0569, 223.0479, 227.7534, 232.5575, 237.7544, 240.6623, 244.0057, 247.8729, 252.8060, 256.0528, 260.2621, 266.8311, 274.8635, 280.4054, 285.3659, 291.9526},
      {213.8420, 223.2955, 227.6383, 234.0464, 239.9115, 246.7640, 251.4444, 255.1267, 258.3886, 261.3945, 266.7784, 271.9519, 277.1864, 282.8964, 286.0615, 289.5965, 293.7811, 299.2261, 302.7948, 307.3160, 314.5251, 323.0321, 329.3525, 334.6431, 341.8919},
    },
    {  // max-eigen
      {0.0000, 0.0001, 0.0002, 0.0014, 0.0059, 0.0235, 0.0539, 0.0961, 0.1517, 0.2191, 0.3893, 0.6088, 0.8987, 1.2929, 1.5605, 1.8943, 2.3375, 2.9787, 3.4602, 4.1384, 5.3033, 6.9993, 8.2248, 9.5328, 11.2906},
      {0.6253, 0.8967, 1.0755, 1.3922, 1.7224, 2.1986, 2.5758, 2.9214, 3.2406, 3.5494, 4.1668, 4.8215, 5.5584, 6.4511, 6.9822, 7.6089, 8.4033, 9.4793, 10.2242, 11.2505, 12.9491, 15.1040, 16.6931, 18.1606, 20.1122},
      {2.7912, 3.4776, 3.8663, 4.4935, 5.1306, 5.9375, 6.5604, 7.0868, 7.5738, 8.0393, 8.9250, 9.8218, 10.8148, 11.9707, 12.6515, 13.4369, 14.3941, 15.6880, 16.5571, 17.7852, 19.7376, 22.1575, 23.9074, 25.6055, 28.1386},
      {5.8861, 6.8654, 7.4572, 8.3159, 9.1782, 10.2534, 11.0433, 11.7159, 12.3175, 12.8798, 13.9589, 15.0453, 16.1931, 17.5359, 18.3169, 19.2176, 20.3083, 21.7607, 22.7321, 24.0434, 26.2405, 28.9581, 30.9771, 33.0478, 35.7628},
      {9.5319, 10.8238, 11.5316, 12.5806, 13.5820, 14.8381, 15.7733, 16.5465, 17.2342, 17.8835, 19.1121, 20.3424, 21.6520, 23.1298, 24.0003, 25.0046, 26.2108, 27.8007, 28.8445, 30.2984, 32.6238, 35.4651, 37.6109, 39.6340, 42.4000},
      {13.5102, 15.0120, 15.7605, 17.0023, 18.1664, 19.6254, 20.6566, 21.5128, 22.2789, 22.9934, 24.3468, 25.6915, 27.1070, 28.7114, 29.6387, 30.7010, 32.0125, 33.7103, 34.8459, 36.3850, 38.8551, 41.9272, 44.1646, 46.4012, 49.0147},
      {17.4556, 19.3459, 20.2311, 21.6301, 22.9034, 24.4924, 25.6229, 26.5578, 27.4037, 28.1760, 29.6415, 31.0744, 32.5740, 34.2789, 35.2629, 36.4003, 37.7811, 39.5784, 40.8015, 42.4208, 45.1000, 48.3021, 50.6770, 53.1528, 56.1987},
      {21.9692, 23.8179, 24.7959, 26.3186, 27.7174, 29.4146, 30.6525, 31.6592, 32.5589, 33.3966, 34.9612, 36.4805, 38.1032, 39.9117, 40.9605, 42.1518, 43.6001, 45.4976, 46.7473, 48.4678, 51.2442, 54.4625, 56.8879, 59.1075, 62.1724},
      {26.4090, 28.4194, 29.4999, 31.1289, 32.6151, 34.4386, 35.7535, 36.8318, 37.7816, 38.6548, 40.3067, 41.9302, 43.6172, 45.5265, 46.6210, 47.8707, 49.3783, 51.3603, 52.6772, 54.4029, 57.2554, 60.7193, 63.3063, 65.5891, 68.5248},
      {30.8331, 33.0845, 34.2295, 36.0396, 37.5874, 39.5086, 40.8790, 42.0136, 43.0272, 43.9459, 45.6896, 47.3780, 49.1493, 51.1368, 52.2704, 53.5850, 55.1449, 57.1913, 58.5759, 60.3979, 63.2839, 66.9286, 69.4899, 71.9570, 74.7099},
      {35.5476, 37.9443, 39.1059, 40.9513, 42.6115, 44.6263, 46.0475, 47.2316, 48.2850, 49.2451, 51.0603, 52.8185, 54.6391, 56.7204, 57.9164, 59.2681, 60.8947, 63.0194, 64.4315, 66.2877, 69.2903, 72.9734, 75.6014, 78.1133, 81.4587},
      {40.1979, 42.7857, 44.0035, 45.9540, 47.6488, 49.7788, 51.2529, 52.4932, 53.5967, 54.5741, 56.4384, 58.2580, 60.1865, 62.3286, 63.5363, 64.9327, 66.5962, 68.7796, 70.1902, 72.1304, 75.2552, 79.0725, 81.8425, 84.6357, 88.4540},
    },
  },
  {  // case 2
    {  // trace
      {0.3441, 0.4922, 0.5965, 0.7859, 1.0084, 1.3420, 1.6229, 1.8802, 2.1319, 2.3817, 2.8926, 3.4437, 4.0750, 4.8357, 5.3029, 5.8585, 6.5596, 7.5446, 8.2149, 9.1396, 10.7231, 12.7548, 14.1982, 15.6265, 17.4643},
      {3.2250, 4.0535, 4.5030, 5.2504, 5.9779, 6.9377, 7.6506, 8.2682, 8.8297, 9.3609, 10.3778, 11.4159, 12.5278, 13.8131, 14.5745, 15.4410, 16.5176, 17.9682, 18.9229, 20.2420, 22.3760, 25.0132, 26.8826, 28.7787, 31.0331},
      {10.0603, 11.5295, 12.3994, 13.7650, 15.0245, 16.6132, 17.7383, 18.6841, 19.5290, 20.3305, 21.8412, 23.3365, 24.9041, 26.6769, 27.6972, 28.8671, 30.2735, 32.1481, 33.3869, 35.0445, 37.7793, 41.1201, 43.4589, 45.7688, 48.9751},
      {20.5906, 22.9737, 24.2468, 26.1940, 27.9632, 30.2217, 31.7936, 33.0708, 34.2246, 35.2848, 37.2658, 39.2055, 41.2087, 43.4628, 44.7468, 46.2146, 47.9786, 50.2814, 51.8041, 53.8210, 57.1400, 61.0681, 63.8534, 66.6176, 70.2960},
      {35.1409, 38.3809, 40.0879, 42.6374, 44.9508, 47.8290, 49.7965, 51.4109, 52.8569, 54.1652, 56.6167, 59.0013, 61.4938, 64.2052, 65.7446, 67.5105, 69.6062, 72.3524, 74.1444, 76.5223, 80.4623, 84.9750, 88.2494, 91.4768, 95.1163},
      {53.5043, 57.6239, 59.7108, 62.9310, 65.8647, 69.3398, 71.7523, 73.7329, 75.4217, 77.0194, 79.9631, 82.7699, 85.6736, 88.8580, 90.6533, 92.7072, 95.1417, 98.2896, 100.4088, 103.1707, 107.5484, 112.7646, 116.1541, 119.7896, 124.0564},
      {75.8903, 80.8977, 83.4222, 87.2714, 90.7871, 94.8003, 97.6194, 99.9263, 101.9328, 103.7962, 107.1727, 110.4182, 113.7540, 117.4138, 119.4830, 121.8173, 124.5850, 128.1700, 130.5686, 133.7270, 138.5558, 144.2374, 148.1870, 152.0214, 156.5035},
      {101.9688, 107.8307, 110.9244, 115.5439, 119.4618, 124.1464, 127.3969, 130.0370, 132.3356, 134.4547, 138.3199, 142.0249, 145.8398, 149.9540, 152.2948, 154.9011, 158.0046, 162.0236, 164.6354, 168.0967, 173.3655, 179.8408, 184.2423, 188.7357, 194.2313},
      {132.1294, 139.0599, 142.5591, 147.6609, 152.1825, 157.4689, 161.0832, 164.0688, 166.6477, 169.0235, 173.3791, 177.4674, 181.6846, 186.2922, 188.9315, 191.8516, 195.2836, 199.7208, 202.6041, 206.3741, 212.2052, 219.2106, 224.0326, 228.4780, 233.8740},
      {166.3720, 174.0296, 177.9004, 183.5798, 188.6337, 194.6083, 198.6736, 201.9712, 204.8777, 207.5064, 212.3421, 216.9220, 221.5184, 226.5667, 229.3759, 232.6070, 236.4205, 241.2186, 244.3657, 248.4266, 254.9457, 262.5741, 268.0703, 273.0244, 279.7248},
      {204.5020, 212.9919, 217.0747, 223.3677, 229.0449, 235.5903, 240.1011, 243.7973, 246.9878, 249.8459, 255.1083, 260.1411, 265.2098, 270.7524, 273.8624, 277.2886, 281.3044, 286.6061, 289.9555, 294.4265, 301.4109, 309.7527, 315.4266, 321.0344, 327.5862},
      {245.7025, 255.2368, 260.1156, 267.1607, 273.3354, 280.4946, 285.5066, 289.4778, 292.9204, 296.0380, 301.7798, 307.2374, 312.7424, 318.7073, 322.0931, 325.8981, 330.3110, 335.8612, 339.5288, 344.3583, 351.7498, 360.8583, 367.4368, 373.4302, 380.7005},
    },
    {  // max-eigen
      {0.3441, 0.4922, 0.5965, 0.7859, 1.0084, 1.3420, 1.6229, 1.8802, 2.1319, 2.3817, 2.8926, 3.4437, 4.0750, 4.8357, 5.3029, 5.8585, 6.5596, 7.5446, 8.2149, 9.1396, 10.7231, 12.7548, 14.1982, 15.6265, 17.4643},
      {2.1142, 2.7137, 3.0345, 3.5810, 4.1246, 4.8521, 5.3991, 5.8724, 6.3096, 6.7257, 7.5453, 8.3871, 9.2946, 10.3699, 11.0084, 11.7440, 12.6684, 13.8780, 14.7276, 15.8547, 17.7355, 20.0655, 21.8186, 23.3568, 25.8311},
      {5.0219, 5.9212, 6.4419, 7.2472, 8.0339, 9.0334, 9.7648, 10.3885, 10.9500, 11.4856, 12.5054, 13.5459, 14.6436, 15.9143, 16.6545, 17.5267, 18.5805, 19.9934, 20.9462, 22.2032, 24.2969, 26.9588, 28.8691, 30.6991, 33.2502},
      {8.5054, 9.6738, 10.3274, 11.3495, 12.3220, 13.5312, 14.4264, 15.1716, 15.8235, 16.4437, 17.6344, 18.8100, 20.0610, 21.4754, 22.2986, 23.2549, 24.4226, 25.9612, 26.9896, 28.4171, 30.6758, 33.5370, 35.6875, 37.6648, 40.4347},
      {12.4381, 13.8442, 14.5724, 15.7448, 16.8727, 18.2615, 19.2651, 20.0928, 20.8445, 21.5304, 22.8502, 24.1452, 25.5244, 27.0763, 27.9922, 29.0134, 30.2750, 31.9581, 33.0696, 34.5599, 37.0314, 40.0554, 42.1509, 44.3951, 47.3514},
      {16.4067, 18.1222, 18.9394, 20.2962, 21.5356, 23.0989, 24.1977, 25.1067, 25.9296, 26.6961, 28.1142, 29.5073, 30.9859, 32.6692, 33.6395, 34.7387, 36.0952, 37.8684, 39.0549, 40.6177, 43.1610, 46.4330, 48.6128, 50.7723, 53.6183},
      {20.7565, 22.5676, 23.5652, 24.9904, 26.3605, 28.0061, 29.2055, 30.2049, 31.0809, 31.8960, 33.4071, 34.9008, 36.4632, 38.2441, 39.2814, 40.4464, 41.8782, 43.7202, 44.9600, 46.6322, 49.3220, 52.6281, 55.1019, 57.5766, 60.5588},
      {25.0394, 27.1096, 28.1388, 29.7540, 31.2111, 32.9880, 34.2782, 35.3413, 36.2770, 37.1325, 38.7574, 40.3383, 42.0167, 43.8821, 44.9608, 46.1953, 47.6683, 49.6282, 50.9114, 52.6077, 55.3731, 58.8178, 61.4157, 63.7910, 66.5611},
      {29.7633, 31.9178, 33.0175, 34.6422, 36.2076, 38.0835, 39.4130, 40.5294, 41.5134, 42.4293, 44.1308, 45.7914, 47.5247, 49.4895, 50.6109, 51.8988, 53.4592, 55.4394, 56.7576, 58.5545, 61.4720, 65.0039, 67.5392, 69.9198, 72.9205},
      {34.2192, 36.6037, 37.7664, 39.5529, 41.1836, 43.1762, 44.5956, 45.7565, 46.7807, 47.7248, 49.4961, 51.2458, 53.0408, 55.0738, 56.2209, 57.5636, 59.1504, 61.2756, 62.6616, 64.5101, 67.5474, 71.3298, 73.8699, 76.3986, 79.1434},
      {38.8389, 41.2586, 42.4998, 44.4652, 46.2000, 48.2602, 49.7525, 50.9750, 52.0455, 53.0378, 54.8705, 56.6922, 58.5775, 60.6969, 61.8915, 63.2750, 64.9208, 67.1086, 68.5534, 70.4494, 73.5198, 77.2551, 79.6976, 82.4139, 85.9079},
      {43.6453, 46.2135, 47.5117, 49.5171, 51.2914, 53.4514, 54.9630, 56.2206, 57.3357, 58.3459, 60.2786, 62.1468, 64.1045, 66.2619, 67.4854, 68.9269, 70.6130, 72.8426, 74.3458, 76.3355, 79.4796, 83.3242, 86.2216, 89.1753, 92.3588},
    },
  },
  {  // case 3
    {  // trace
      {0.0000, 0.0000, 0.0002, 0.0010, 0.0040, 0.0157, 0.0358, 0.0646, 0.1023, 0.1501, 0.2769, 0.4579, 0.7119, 1.0755, 1.3230, 1.6400, 2.0668, 2.7000, 3.1605, 3.8318, 5.0177, 6.6256, 7.8422, 9.1199, 10.6812},
      {1.5030, 1.9952, 2.2886, 2.7946, 3.3184, 4.0273, 4.5830, 5.0693, 5.5170, 5.9538, 6.7911, 7.6614, 8.6049, 9.7042, 10.3686, 11.1374, 12.0835, 13.3731, 14.2338, 15.4113, 17.3402, 19.7500, 21.5634, 23.2915, 25.6268},
      {7.1087, 8.4537, 9.1391, 10.2807, 11.3655, 12.7646, 13.7666, 14.6208, 15.3672, 16.0812, 17.4475, 18.8145, 20.2495, 21.8689, 22.8156, 23.8930, 25.2064, 26.9636, 28.1132, 29.6740, 32.1804, 35.2131, 37.4947, 39.5248, 42.4788},
      {16.7702, 18.9183, 20.0983, 21.8684, 23.4947, 25.5014, 26.9332, 28.1390, 29.2260, 30.1976, 32.0416, 33.8457, 35.7243, 37.8122, 39.0293, 40.4104, 42.0727, 44.2667, 45.7216, 47.6444, 50.7052, 54.5364, 57.1395, 59.9494, 63.0539},
      {30.4703, 33.5060, 34.9936, 37.3740, 39.5494, 42.2177, 44.0843, 45.5959, 46.9481, 48.1867, 50.4725, 52.7393, 55.0494, 57.6345, 59.0793, 60.7763, 62.7926, 65.3294, 67.0528, 69.3483, 73.0915, 77.4459, 80.5696, 83.3861, 87.5425},
      {48.0799, 51.8916, 53.9254, 56.8636, 59.5284, 62.7481, 65.0588, 66.9217, 68.5938, 70.0931, 72.8887, 75.5570, 78.3262, 81.3741, 83.0978, 85.0326, 87.3225, 90.4080, 92.3741, 95.0499, 99.2247, 104.2224, 107.6226, 110.9331, 114.8276},
      {69.2820, 74.2436, 76.5914, 80.2444, 83.4686, 87.2941, 90.0207, 92.2203, 94.1490, 95.9175, 99.1351, 102.2328, 105.4511, 108.9685, 110.9643, 113.2085, 115.9297, 119.3598, 121.6008, 124.5506, 129.1402, 134.6804, 138.8158, 142.4614, 147.4513},
      {94.8369, 100.4133, 103.1935, 107.4109, 111.2041, 115.7674, 118.8600, 121.4114, 123.5879, 125.5773, 129.3197, 132.8709, 136.5108, 140.4578, 142.7021, 145.2320, 148.2544, 152.0807, 154.6683, 158.0875, 163.2287, 169.5601, 173.6559, 177.6228, 182.4960},
      {124.1605, 130.1935, 133.6220, 138.6393, 142.9709, 148.0661, 151.5860, 154.4700, 156.9519, 159.1814, 163.3781, 167.3489, 171.4175, 175.8690, 178.3565, 181.1874, 184.5671, 188.8417, 191.6292, 195.2986, 201.0246, 207.8247, 212.6138, 217.0114, 222.6775},
      {157.2396, 164.4426, 168.0628, 173.7077, 178.5316, 184.2571, 188.1849, 191.3964, 194.1653, 196.6853, 201.3611, 205.7200, 210.2083, 215.1313, 217.9366, 221.0599, 224.7004, 229.4082, 232.3931, 236.4556, 242.6307, 250.0290, 255.3956, 260.4422, 267.3138},
      {193.7720, 202.3979, 206.4070, 212.4726, 217.9238, 224.2472, 228.6843, 232.1898, 235.2608, 238.0646, 243.2002, 248.0773, 252.9948, 258.2957, 261.2878, 264.7334, 268.7241, 273.8218, 277.0235, 281.4047, 288.3898, 296.5873, 302.2667, 307.5981, 314.6820},
      {235.0686, 244.2445, 248.5149, 255.3069, 261.1232, 268.1799, 273.0192, 276.8943, 280.2657, 283.3262, 288.9195, 294.1895, 299.5388, 305.3362, 308.5571, 312.2192, 316.5143, 322.0013, 325.5313, 330.2367, 337.6849, 346.7737, 352.7032, 358.4785, 365.4320},
    },
    {  // max-eigen
      {0.0000, 0.0000, 0.0002, 0.0010, 0.0040, 0.0157, 0.0358, 0.0646, 0.1023, 0.1501, 0.2769, 0.4579, 0.7119, 1.0755, 1.3230, 1.6400, 2.0668, 2.7000, 3.1605, 3.8318, 5.0177, 6.6256, 7.8422, 9.1199, 10.6812},
      {1.3240, 1.7649, 2.0344, 2.4793, 2.9455, 3.5750, 4.0701, 4.5172, 4.9190, 5.3172, 6.0862, 6.8834, 7.7568, 8.7964, 9.4072, 10.1367, 11.0205, 12.2250, 13.0562, 14.1712, 16.0433, 18.3633, 19.9934, 21.7589, 23.8219},
      {4.2673, 5.1112, 5.5643, 6.3350, 7.0614, 8.0181, 8.7339, 9.3416, 9.8866, 10.4103, 11.4151, 12.4258, 13.5321, 14.7857, 15.5107, 16.3729, 17.3947, 18.7817, 19.7345, 21.0272, 23.0947, 25.7210, 27.5866, 29.5739, 31.9447},
      {7.7521, 8.8713, 9.5093, 10.5053, 11.4552, 12.6441, 13.5043, 14.2422, 14.8964, 15.5117, 16.6738, 17.8550, 19.0934, 20.5044, 21.3178, 22.2657, 23.4401, 24.9849, 26.0209, 27.4242, 29.6831, 32.5345, 34.5934, 36.5105, 39.3461},
      {11.6446, 13.0117, 13.7625, 14.9525, 16.0476, 17.4169, 18.3905, 19.2150, 19.9404, 20.6341, 21.9392, 23.2121, 24.5704, 26.1380, 27.0333, 28.0827, 29.3470, 31.0071, 32.1318, 33.6243, 36.0211, 39.0313, 41.3439, 43.5083, 46.2091},
      {15.7427, 17.3297, 18.2159, 19.5282, 20.7582, 22.2871, 23.3826, 24.2809, 25.0934, 25.8425, 27.2475, 28.6621, 30.1291, 31.8022, 32.7670, 33.8734, 35.2288, 36.9900, 38.1488, 39.7599, 42.3136, 45.5855, 47.8764, 49.9894, 52.7128},
      {19.9628, 21.8365, 22.7779, 24.2576, 25.5725, 27.2410, 28.4219, 29.4109, 30.2687, 31.0724, 32.5776, 34.0568, 35.6357, 37.4032, 38.4498, 39.6213, 41.0274, 42.8894, 44.1080, 45.8119, 48.5514, 51.7565, 54.1359, 56.4803, 59.7013},
      {24.3390, 26.4164, 27.4771, 29.0543, 30.4696, 32.2593, 33.5052, 34.5432, 35.4693, 36.3195, 37.9143, 39.4943, 41.1541, 43.0351, 44.0947, 45.3263, 46.8076, 48.7510, 50.0449, 51.7673, 54.5101, 58.0011, 60.5476, 63.0524, 66.0002},
      {28.9613, 31.1085, 32.2113, 33.8628, 35.4147, 37.3016, 38.6258, 39.7289, 40.7056, 41.5965, 43.2905, 44.9535, 46.6967, 48.6615, 49.7725, 51.0413, 52.5822, 54.5859, 55.9311, 57.7379, 60.6617, 64.1606, 66.6368, 69.0605, 72.1217},
      {33.5875, 35.9033, 37.0782, 38.8499, 40.4245, 42.3916, 43.7902, 44.9543, 45.9693, 46.9183, 48.6922, 50.4261, 52.2423, 54.2619, 55.4139, 56.7400, 58.3417, 60.4277, 61.8180, 63.6732, 66.6496, 70.3932, 72.7522, 75.2334, 78.8179},
      {38.1869, 40.6721, 41.8465, 43.7684, 45.4580, 47.5354, 48.9977, 50.1880, 51.2524, 52.2450, 54.0902, 55.8836, 57.7663, 59.8464, 61.0441, 62.4259, 64.0675, 66.2201, 67.6667, 69.6075, 72.6697, 76.3494, 78.9182, 81.4298, 84.6932},
      {43.0191, 45.5123, 46.7507, 48.7572, 50.5488, 52.6854, 54.2188, 55.4679, 56.5897, 57.6100, 59.5084, 61.3595, 63.2767, 65.4447, 66.6872, 68.1281, 69.8307, 72.0768, 73.5553, 75.4600, 78.5563, 82.3939, 85.0085, 87.7253, 91.2836},
    },
  },
  {  // case 4
    {  // trace
      {0.9890, 1.3320, 1.5317, 1.8823, 2.2588, 2.7871, 3.2073, 3.5777, 3.9307, 4.2763, 4.9567, 5.6707, 6.4591, 7.3915, 7.9583, 8.6295, 9.4610, 10.5907, 11.3545, 12.4288, 14.2033, 16.3991, 18.0144, 19.6115, 21.8189},
      {5.7169, 6.7822, 7.4109, 8.3549, 9.2796, 10.4798, 11.3618, 12.1021, 12.7749, 13.4106, 14.6147, 15.8260, 17.1095, 18.5809, 19.4415, 20.4299, 21.6323, 23.2175, 24.2896, 25.7277, 28.0657, 30.9644, 33.0477, 35.0955, 37.7131},
      {14.3484, 16.2744, 17.3173, 18.9229, 20.4242, 22.2426, 23.5443, 24.6369, 25.5901, 26.4963, 28.1833, 29.8358, 31.5721, 33.5308, 34.6488, 35.9447, 37.4861, 39.5398, 40.8751, 42.6734, 45.5783, 49.1203, 51.7184, 54.2198, 57.3820},
      {27.1703, 29.8774, 31.3138, 33.4709, 35.4794, 37.9421, 39.6913, 41.0763, 42.3490, 43.4908, 45.6459, 47.7453, 49.9263, 52.3344, 53.7146, 55.2471, 57.1841, 59.6462, 61.2474, 63.4325, 66.8773, 71.0543, 74.0188, 76.7602, 80.4841},
      {43.8094, 47.3161, 49.1369, 51.9702, 54.4686, 57.5328, 59.6934, 61.4293, 62.9640, 64.4043, 67.0260, 69.5791, 72.1865, 75.0661, 76.6901, 78.5232, 80.7818, 83.6663, 85.5476, 88.1434, 92.1345, 96.9068, 100.3344, 103.4032, 107.2496},
      {63.8638, 68.7111, 70.9488, 74.3561, 77.4033, 81.0723, 83.6082, 85.7168, 87.5375, 89.1877, 92.2952, 95.2850, 98.3204, 101.6745, 103.5883, 105.7439, 108.2885, 111.6158, 113.7368, 116.6333, 121.0679, 126.4947, 130.3757, 133.8453, 138.4126},
      {88.5593, 93.7710, 96.5500, 100.5253, 104.2213, 108.5215, 111.4655, 113.8749, 115.9966, 117.9021, 121.4641, 124.8483, 128.3617, 132.1612, 134.3327, 136.7568, 139.6908, 143.4114, 145.8921, 149.0498, 154.0627, 160.0328, 164.1288, 167.8903, 172.9720},
      {116.3639, 122.7664, 125.9799, 130.7746, 134.9489, 139.7789, 143.1300, 145.9250, 148.3133, 150.4849, 154.5346, 158.3906, 162.2946, 166.6157, 169.0128, 171.7382, 174.9361, 179.1006, 181.8029, 185.3356, 190.8299, 197.5824, 202.0529, 206.3004, 211.8771},
      {148.6555, 155.9959, 159.4178, 164.7859, 169.4943, 174.9820, 178.8061, 181.9000, 184.5923, 187.0022, 191.4690, 195.7510, 200.0935, 204.8435, 207.5510, 210.5797, 214.1551, 218.6827, 221.6227, 225.5028, 231.5148, 238.7850, 243.6508, 248.7086, 254.7263},
      {184.4173, 192.7761, 196.8280, 202.6723, 207.8629, 213.9942, 218.2632, 221.7246, 224.7006, 227.3917, 232.3401, 237.0525, 241.8499, 246.9739, 249.9124, 253.2391, 257.0851, 261.9989, 265.2404, 269.5125, 276.1264, 284.2488, 289.6086, 295.0081, 301.8916},
      {225.1334, 233.5306, 237.8549, 244.3829, 250.2088, 256.9412, 261.5978, 265.3349, 268.6080, 271.6088, 277.0379, 282.1753, 287.4121, 293.0600, 296.2267, 299.7686, 303.9507, 309.2832, 312.7770, 317.2708, 324.4277, 333.1638, 339.2664, 344.9177, 351.4992},
      {268.8008, 278.0824, 282.8760, 289.8776, 296.2972, 303.6539, 308.8202, 312.9364, 316.4728, 319.6907, 325.5516, 331.1131, 336.7608, 342.8484, 346.3141, 350.1424, 354.6255, 360.4437, 364.1851, 369.1870, 376.7775, 386.0670, 392.6738, 398.7534, 406.1490},
    },
    {  // max-eigen
      {0.9890, 1.3320, 1.5317, 1.8823, 2.2588, 2.7871, 3.2073, 3.5777, 3.9307, 4.2763, 4.9567, 5.6707, 6.4591, 7.3915, 7.9583, 8.6295, 9.4610, 10.5907, 11.3545, 12.4288, 14.2033, 16.3991, 18.0144, 19.6115, 21.8189},
      {3.5886, 4.3529, 4.7607, 5.4307, 6.1019, 6.9682, 7.6186, 8.1785, 8.6909, 9.1800, 10.1184, 11.0768, 12.0997, 13.2839, 13.9909, 14.8021, 15.8034, 17.1304, 18.0330, 19.2877, 21.2801, 23.7992, 25.6558, 27.4583, 30.0242},
      {6.8520, 7.9176, 8.5095, 9.4612, 10.3388, 11.4493, 12.2751, 12.9613, 13.5916, 14.1700, 15.2852, 16.4043, 17.6052, 18.9589, 19.7643, 20.6848, 21.8061, 23.2956, 24.2926, 25.6349, 27.8874, 30.6800, 32.6332, 34.6023, 37.0905},
      {10.6622, 11.9650, 12.6670, 13.7711, 14.8340, 16.1324, 17.0760, 17.8781, 18.5767, 19.2446, 20.4931, 21.7359, 23.0571, 24.5576, 25.4337, 26.4495, 27.6862, 29.3021, 30.3986, 31.8752, 34.1832, 37.1526, 39.3900, 41.6766, 44.3773},
      {14.6429, 16.1571, 17.0181, 18.3215, 19.4532, 20.9431, 21.9961, 22.8725, 23.6524, 24.3824, 25.7726, 27.1434, 28.5984, 30.2067, 31.1509, 32.2347, 33.5663, 35.2770, 36.4385, 37.9956, 40.5276, 43.6649, 45.9845, 48.2713, 51.0808},
      {18.8823, 20.5782, 21.4807, 22.9428, 24.2676, 25.8688, 27.0219, 27.9766, 28.8234, 29.6085, 31.0724, 32.5371, 34.0815, 35.8200, 36.8230, 37.9672, 39.3829, 41.1782, 42.3865, 44.0168, 46.7045, 49.8651, 52.1933, 54.4586, 57.6522},
      {23.2123, 25.1235, 26.1456, 27.6918, 29.0936, 30.8248, 32.0616, 33.0788, 33.9751, 34.8111, 36.3864, 37.9300, 39.5682, 41.3937, 42.4646, 43.6763, 45.1330, 47.0444, 48.3074, 49.9815, 52.7652, 56.2030, 58.7331, 61.2504, 64.3721},
      {27.6630, 29.7988, 30.8399, 32.4782, 34.0119, 35.8681, 37.1753, 38.2481, 39.2100, 40.0803, 41.7362, 43.3784, 45.0855, 47.0299, 48.1355, 49.4025, 50.9177, 52.8883, 54.1975, 55.9572, 58.8403, 62.3593, 64.8483, 67.1487, 70.1933},
      {32.1933, 34.5649, 35.7071, 37.4611, 39.0295, 40.9366, 42.3017, 43.4422, 44.4526, 45.3754, 47.1167, 48.8416, 50.6268, 52.6345, 53.7793, 55.0865, 56.6572, 58.7051, 60.0797, 61.9010, 64.8635, 68.4916, 70.9553, 73.1929, 76.6315},
      {36.9687, 39.3186, 40.4865, 42.3220, 44.0096, 46.0552, 47.4967, 48.6685, 49.7093, 50.6976, 52.5323, 54.3077, 56.1312, 58.1957, 59.3760, 60.7304, 62.3798, 64.4865, 65.8997, 67.8262, 70.8844, 74.5314, 77.1000, 79.6738, 82.7697},
      {41.7251, 44.1400, 45.3621, 47.3227, 49.0791, 51.1885, 52.6888, 53.9298, 55.0367, 56.0321, 57.9198, 59.7424, 61.6531, 63.8021, 65.0060, 66.4163, 68.1007, 70.3209, 71.7994, 73.7379, 76.8185, 80.5513, 83.2441, 85.8236, 89.0903},
      {46.4236, 48.9534, 50.3343, 52.3373, 54.1821, 56.3582, 57.9067, 59.1758, 60.3182, 61.3622, 63.2960, 65.2100, 67.1764, 69.3930, 70.6383, 72.0832, 73.7986, 76.0491, 77.5700, 79.5181, 82.7476, 86.6885, 89.6749, 92.4328, 95.6777},
    },
  },
  {  // case 5
    {  // trace
      {0.0000, 0.0000, 0.0002, 0.0010, 0.0040, 0.0161, 0.0365, 0.0650, 0.1028, 0.1505, 0.2785, 0.4560, 0.7054, 1.0671, 1.3178, 1.6308, 2.0684, 2.7148, 3.1714, 3.8413, 5.0470, 6.6674, 7.9206, 9.1295, 10.9134},
      {2.3367, 2.9921, 3.3687, 4.0280, 4.6640, 5.5243, 6.1888, 6.7628, 7.2799, 7.7752, 8.7445, 9.7337, 10.7876, 12.0426, 12.7754, 13.6200, 14.6674, 16.0614, 16.9819, 18.2634, 20.4357, 22.9811, 24.9132, 26.8442, 29.4740},
      {9.6227, 11.1938, 12.0178, 13.3215, 14.6023, 16.1836, 17.3319, 18.3075, 19.1547, 19.9461, 21.4736, 22.9739, 24.5430, 26.3534, 27.3828, 28.5826, 30.0047, 31.8796, 33.1370, 34.8533, 37.5053, 40.8131, 43.3244, 45.6884, 48.4275},
      {21.1373, 23.5485, 24.8034, 26.8513, 28.6792, 30.9345, 32.5374, 33.8666, 35.0284, 36.1143, 38.1017, 40.0417, 42.0681, 44.3481, 45.6635, 47.1467, 48.9387, 51.2717, 52.7918, 54.8997, 58.1109, 62.2223, 65.1117, 67.6295, 71.1693},
      {36.7323, 39.9462, 41.7474, 44.4243, 46.7859, 49.6374, 51.6702, 53.2988, 54.7545, 56.0851, 58.5524, 60.9616, 63.4547, 66.1899, 67.7459, 69.5179, 71.6506, 74.4139, 76.2331, 78.6268, 82.3897, 87.2130, 90.4468, 93.7587, 97.2857},
      {56.3403, 60.4065, 62.5336, 65.8432, 68.7529, 72.2682, 74.7139, 76.7115, 78.4378, 80.0586, 82.9868, 85.8325, 88.7368, 91.9437, 93.7531, 95.8116, 98.2744, 101.4315, 103.5173, 106.3367, 110.7146, 115.9151, 119.4201, 122.8621, 126.8897},
      {79.7951, 84.6417, 87.3485, 91.3381, 94.7247, 98.7398, 101.5866, 103.9207, 105.9449, 107.8202, 111.2220, 114.5369, 117.8826, 121.5374, 123.6392, 125.9815, 128.7673, 132.3782, 134.6841, 137.7289, 142.6679, 148.4914, 152.5853, 156.3488, 160.7976},
      {107.0001, 113.1639, 116.0879, 120.4832, 124.4486, 129.1405, 132.4159, 135.0182, 137.3463, 139.4885, 143.3654, 147.0447, 150.8526, 155.0070, 157.3039, 159.9469, 163.0471, 167.0642, 169.7888, 173.2648, 178.5564, 185.1473, 189.5051, 193.5143, 198.6881},
      {138.0392, 145.1102, 148.5516, 153.6577, 158.1461, 163.3543, 167.0091, 170.0048, 172.6342, 174.9930, 179.3395, 183.4727, 187.6859, 192.3110, 194.9367, 197.8317, 201.3053, 205.7327, 208.6248, 212.3678, 218.3262, 225.2753, 230.1765, 234.8423, 239.7096},
      {173.5287, 181.1320, 184.8643, 190.5847, 195.5643, 201.4957, 205.5912, 208.8955, 211.7757, 214.3891, 219.1948, 223.7466, 228.3867, 233.5544, 236.4214, 239.6405, 243.4061, 248.1659, 251.2785, 255.4485, 261.8386, 269.5691, 275.0584, 280.2570, 286.8621},
      {212.3564, 220.9388, 224.9145, 231.2573, 236.8809, 243.4811, 247.9962, 251.6420, 254.8080, 257.7065, 262.9624, 267.9458, 273.0451, 278.5717, 281.6885, 285.1924, 289.2578, 294.5199, 297.9377, 302.4534, 309.3940, 317.8112, 323.5880, 329.2230, 336.0434},
      {255.6961, 264.4713, 268.9586, 275.8655, 282.0432, 289.3120, 294.2431, 298.2707, 301.7314, 304.8483, 310.4946, 315.9830, 321.4909, 327.4449, 330.8138, 334.5365, 338.9739, 344.6123, 348.2823, 353.1566, 360.5984, 369.5093, 375.7618, 381.7129, 388.9171},
    },
    {  // max-eigen
      {0.0000, 0.0000, 0.0002, 0.0010, 0.0040, 0.0161, 0.0365, 0.0650, 0.1028, 0.1505, 0.2785, 0.4560, 0.7054, 1.0671, 1.3178, 1.6308, 2.0684, 2.7148, 3.1714, 3.8413, 5.0470, 6.6674, 7.9206, 9.1295, 10.9134},
      {2.1235, 2.7001, 3.0424, 3.6281, 4.2005, 4.9853, 5.5983, 6.1272, 6.6106, 7.0738, 7.9775, 8.8976, 9.8983, 11.0655, 11.7523, 12.5685, 13.5614, 14.9147, 15.8114, 17.0094, 19.0852, 21.5768, 23.4105, 25.2657, 27.8421},
      {5.5560, 6.5992, 7.1681, 8.0585, 8.9038, 9.9935, 10.7922, 11.4658, 12.0678, 12.6539, 13.7554, 14.8718, 16.0613, 17.4107, 18.1942, 19.1199, 20.2607, 21.7354, 22.7500, 24.1465, 26.3638, 29.0861, 31.0569, 33.0503, 35.6320},
      {9.4594, 10.7854, 11.4809, 12.5870, 13.6171, 14.9018, 15.8469, 16.6259, 17.3260, 17.9834, 19.2346, 20.4829, 21.7889, 23.2830, 24.1595, 25.1701, 26.3931, 27.9685, 29.0502, 30.5311, 32.9395, 35.9839, 38.0929, 40.3104, 43.0204},
      {13.5360, 15.1534, 15.9649, 17.2226, 18.3948, 19.8377, 20.8778, 21.7429, 22.5338, 23.2563, 24.6031, 25.9733, 27.4109, 29.0106, 29.9525, 31.0276, 32.3248, 34.0578, 35.2169, 36.7886, 39.3171, 42.4558, 44.8424, 46.9088, 49.5845},
      {17.8615, 19.6610, 20.5140, 21.9402, 23.2354, 24.8338, 25.9748, 26.9181, 27.7568, 28.5467, 30.0282, 31.4822, 33.0147, 34.7460, 35.7421, 36.8945, 38.2703, 40.0958, 41.3347, 42.9853, 45.6110, 48.9187, 51.2903, 53.4341, 56.3035},
      {22.1934, 24.2008, 25.2384, 26.7463, 28.1562, 29.8598, 31.0855, 32.1002, 32.9935, 33.8168, 35.3839, 36.9400, 38.5729, 40.3846, 41.4488, 42.6568, 44.1241, 46.0244, 47.3203, 49.0359, 51.8311, 55.1830, 57.6388, 60.0520, 63.0294},
      {26.8488, 28.9497, 29.9630, 31.5646, 33.0858, 34.9226, 36.2176, 37.2918, 38.2586, 39.1439, 40.7901, 42.4178, 44.1302, 46.0493, 47.1457, 48.4115, 49.9363, 51.9166, 53.2256, 54.9884, 57.8984, 61.5577, 64.1748, 66.5062, 69.4196},
      {31.3815, 33.6485, 34.7544, 36.4862, 38.0787, 40.0002, 41.3680, 42.5043, 43.5100, 44.4456, 46.2005, 47.9044, 49.6894, 51.6810, 52.8180, 54.1079, 55.6736, 57.7559, 59.1387, 60.9821, 63.9492, 67.4986, 70.0435, 72.5464, 75.8233},
      {36.3154, 38.5595, 39.6667, 41.5117, 43.1204, 45.1506, 46.6045, 47.7936, 48.8413, 49.8101, 51.6103, 53.3714, 55.2239, 57.2838, 58.4782, 59.8158, 61.4680, 63.6047, 65.0508, 66.9433, 69.9301, 73.6094, 76.2757, 78.8606, 81.7435},
      {40.9235, 43.3556, 44.5600, 46.4748, 48.2142, 50.3393, 51.8399, 53.0702, 54.1450, 55.1669, 57.0465, 58.8623, 60.7647, 62.8954, 64.1215, 65.5057, 67.2079, 69.3912, 70.8464, 72.8110, 75.8987, 79.7305, 82.4598, 84.9270, 88.2634},
      {45.6861, 48.1602, 49.4263, 51.5251, 53.3226, 55.5082, 57.0632, 58.3423, 59.4562, 60.4987, 62.4328, 64.3210, 66.2899, 68.4824, 69.7471, 71.1989, 72.9645, 75.2280, 76.7062, 78.6731, 81.8596, 85.7434, 88.5439, 91.2684, 94.3762},
    },
  },
};

}  // namespace cointkit::detail
