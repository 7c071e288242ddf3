#pragma once
// Nested Gauss-Patterson quadrature tables on (-1,1), weight function 1.
// Level l has 2^(l+1)-1 nodes; each level's nodes contain the previous level's.

namespace apf::detail {

inline constexpr double kGaussPattersonNodes0[1] = {
    0.0};

inline constexpr double kGaussPattersonWeights0[1] = {
    2.0000000000000000};

inline constexpr double kGaussPattersonNodes1[3] = {
    -0.77459666924148338,
    0.0,
    0.77459666924148338};

inline constexpr double kGaussPattersonWeights1[3] = {
    0.55555555555555556,
    0.88888888888888889,
    0.55555555555555556};

inline constexpr double kGaussPattersonNodes2[7] = {
    -0.96049126870802028,
    -0.77459666924148338,
    -0.43424374934680256,
    0.0,
    0.43424374934680256,
    0.77459666924148338,
    0.96049126870802028};

inline constexpr double kGaussPattersonWeights2[7] = {
    0.10465622602646727,
    0.26848808986833344,
    0.40139741477596222,
    0.45091653865847414,
    0.40139741477596222,
    0.26848808986833344,
    0.10465622602646727};

inline constexpr double kGaussPattersonNodes3[15] = {
    -0.99383196321275502,
    -0.96049126870802028,
    -0.88845923287225700,
    -0.77459666924148338,
    -0.62110294673722640,
    -0.43424374934680256,
    -0.22338668642896688,
    0.0,
    0.22338668642896688,
    0.43424374934680256,
    0.62110294673722640,
    0.77459666924148338,
    0.88845923287225700,
    0.96049126870802028,
    0.99383196321275502};

inline constexpr double kGaussPattersonWeights3[15] = {
    0.017001719629940260,
    0.051603282997079740,
    0.092927195315124538,
    0.13441525524378422,
    0.17151190913639138,
    0.20062852937698902,
    0.21915685840158750,
    0.22551049979820669,
    0.21915685840158750,
    0.20062852937698902,
    0.17151190913639138,
    0.13441525524378422,
    0.092927195315124538,
    0.051603282997079740,
    0.017001719629940260};

inline constexpr double kGaussPattersonNodes4[31] = {
    -0.99909812496766760,
    -0.99383196321275502,
    -0.98153114955374011,
    -0.96049126870802028,
    -0.92965485742974006,
    -0.88845923287225700,
    -0.83672593816886874,
    -0.77459666924148338,
    -0.70249620649152708,
    -0.62110294673722640,
    -0.53131974364437562,
    -0.43424374934680256,
    -0.33113539325797683,
    -0.22338668642896688,
    -0.11248894313318663,
    0.0,
    0.11248894313318663,
    0.22338668642896688,
    0.33113539325797683,
    0.43424374934680256,
    0.53131974364437562,
    0.62110294673722640,
    0.70249620649152708,
    0.77459666924148338,
    0.83672593816886874,
    0.88845923287225700,
    0.92965485742974006,
    0.96049126870802028,
    0.98153114955374011,
    0.99383196321275502,
    0.99909812496766760};

inline constexpr double kGaussPattersonWeights4[31] = {
    0.0025447807915618744,
    0.0084345657393211062,
    0.016446049854387811,
    0.025807598096176654,
    0.035957103307129322,
    0.046462893261757987,
    0.056979509494123357,
    0.067207754295990704,
    0.076879620499003531,
    0.085755920049990351,
    0.093627109981264474,
    0.10031427861179558,
    0.10566989358023481,
    0.10957842105592464,
    0.11195687302095346,
    0.11275525672076869,
    0.11195687302095346,
    0.10957842105592464,
    0.10566989358023481,
    0.10031427861179558,
    0.093627109981264474,
    0.085755920049990351,
    0.076879620499003531,
    0.067207754295990704,
    0.056979509494123357,
    0.046462893261757987,
    0.035957103307129322,
    0.025807598096176654,
    0.016446049854387811,
    0.0084345657393211062,
    0.0025447807915618744};

inline constexpr double kGaussPattersonNodes5[63] = {
    -0.99987288812035761,
    -0.99909812496766760,
    -0.99720625937222196,
    -0.99383196321275502,
    -0.98868475754742948,
    -0.98153114955374011,
    -0.97218287474858180,
    -0.96049126870802028,
    -0.94634285837340291,
    -0.92965485742974006,
    -0.91037115695700429,
    -0.88845923287225700,
    -0.86390793819369048,
    -0.83672593816886874,
    -0.80694053195021761,
    -0.77459666924148338,
    -0.73975604435269476,
    -0.70249620649152708,
    -0.66290966002478060,
    -0.62110294673722640,
    -0.57719571005204581,
    -0.53131974364437562,
    -0.48361802694584103,
    -0.43424374934680256,
    -0.38335932419873035,
    -0.33113539325797683,
    -0.27774982202182432,
    -0.22338668642896688,
    -0.16823525155220746,
    -0.11248894313318663,
    -0.056344313046592790,
    0.0,
    0.056344313046592790,
    0.11248894313318663,
    0.16823525155220746,
    0.22338668642896688,
    0.27774982202182432,
    0.33113539325797683,
    0.38335932419873035,
    0.43424374934680256,
    0.48361802694584103,
    0.53131974364437562,
    0.57719571005204581,
    0.62110294673722640,
    0.66290966002478060,
    0.70249620649152708,
    0.73975604435269476,
    0.77459666924148338,
    0.80694053195021761,
    0.83672593816886874,
    0.86390793819369048,
    0.88845923287225700,
    0.91037115695700429,
    0.92965485742974006,
    0.94634285837340291,
    0.96049126870802028,
    0.97218287474858180,
    0.98153114955374011,
    0.98868475754742948,
    0.99383196321275502,
    0.99720625937222196,
    0.99909812496766760,
    0.99987288812035761};

inline constexpr double kGaussPattersonWeights5[63] = {
    0.00036322148184553066,
    0.0012651565562300680,
    0.0025790497946856883,
    0.0042176304415588548,
    0.0061155068221172463,
    0.0082230079572359297,
    0.010498246909621322,
    0.012903800100351266,
    0.015406750466559498,
    0.017978551568128270,
    0.020594233915912711,
    0.023231446639910269,
    0.025869679327214747,
    0.028489754745833549,
    0.031073551111687965,
    0.033603877148207731,
    0.036064432780782573,
    0.038439810249455532,
    0.040715510116944319,
    0.042877960025007734,
    0.044914531653632197,
    0.046813554990628012,
    0.048564330406673199,
    0.050157139305899537,
    0.051583253952048459,
    0.052834946790116520,
    0.053905499335266064,
    0.054789210527962865,
    0.055481404356559364,
    0.055978436510476319,
    0.056277699831254301,
    0.056377628360384717,
    0.056277699831254301,
    0.055978436510476319,
    0.055481404356559364,
    0.054789210527962865,
    0.053905499335266064,
    0.052834946790116520,
    0.051583253952048459,
    0.050157139305899537,
    0.048564330406673199,
    0.046813554990628012,
    0.044914531653632197,
    0.042877960025007734,
    0.040715510116944319,
    0.038439810249455532,
    0.036064432780782573,
    0.033603877148207731,
    0.031073551111687965,
    0.028489754745833549,
    0.025869679327214747,
    0.023231446639910269,
    0.020594233915912711,
    0.017978551568128270,
    0.015406750466559498,
    0.012903800100351266,
    0.010498246909621322,
    0.0082230079572359297,
    0.0061155068221172463,
    0.0042176304415588548,
    0.0025790497946856883,
    0.0012651565562300680,
    0.00036322148184553066};

inline constexpr double kGaussPattersonNodes6[127] = {
    -0.99998243035489160,
    -0.99987288812035761,
    -0.99959879967191068,
    -0.99909812496766760,
    -0.99831663531840739,
    -0.99720625937222196,
    -0.99572410469840719,
    -0.99383196321275502,
    -0.99149572117810613,
    -0.98868475754742948,
    -0.98537149959852037,
    -0.98153114955374011,
    -0.97714151463970571,
    -0.97218287474858180,
    -0.96663785155841657,
    -0.96049126870802028,
    -0.95373000642576114,
    -0.94634285837340291,
    -0.93832039777959288,
    -0.92965485742974006,
    -0.92034002547001242,
    -0.91037115695700429,
    -0.89974489977694004,
    -0.88845923287225700,
    -0.87651341448470527,
    -0.86390793819369048,
    -0.85064449476835028,
    -0.83672593816886874,
    -0.82215625436498041,
    -0.80694053195021761,
    -0.79108493379984836,
    -0.77459666924148338,
    -0.75748396638051364,
    -0.73975604435269476,
    -0.72142308537009892,
    -0.70249620649152708,
    -0.68298743109107923,
    -0.66290966002478060,
    -0.64227664250975951,
    -0.62110294673722640,
    -0.59940393024224289,
    -0.57719571005204581,
    -0.55449513263193255,
    -0.53131974364437562,
    -0.50768775753371660,
    -0.48361802694584103,
    -0.45913001198983233,
    -0.43424374934680256,
    -0.40897982122988867,
    -0.38335932419873035,
    -0.35740383783153215,
    -0.33113539325797683,
    -0.30457644155671404,
    -0.27774982202182432,
    -0.25067873030348318,
    -0.22338668642896688,
    -0.19589750271110015,
    -0.16823525155220746,
    -0.14042423315256017,
    -0.11248894313318663,
    -0.084454040083710884,
    -0.056344313046592790,
    -0.028184648949745694,
    0.0,
    0.028184648949745694,
    0.056344313046592790,
    0.084454040083710884,
    0.11248894313318663,
    0.14042423315256017,
    0.16823525155220746,
    0.19589750271110015,
    0.22338668642896688,
    0.25067873030348318,
    0.27774982202182432,
    0.30457644155671404,
    0.33113539325797683,
    0.35740383783153215,
    0.38335932419873035,
    0.40897982122988867,
    0.43424374934680256,
    0.45913001198983233,
    0.48361802694584103,
    0.50768775753371660,
    0.53131974364437562,
    0.55449513263193255,
    0.57719571005204581,
    0.59940393024224289,
    0.62110294673722640,
    0.64227664250975951,
    0.66290966002478060,
    0.68298743109107923,
    0.70249620649152708,
    0.72142308537009892,
    0.73975604435269476,
    0.75748396638051364,
    0.77459666924148338,
    0.79108493379984836,
    0.80694053195021761,
    0.82215625436498041,
    0.83672593816886874,
    0.85064449476835028,
    0.86390793819369048,
    0.87651341448470527,
    0.88845923287225700,
    0.89974489977694004,
    0.91037115695700429,
    0.92034002547001242,
    0.92965485742974006,
    0.93832039777959288,
    0.94634285837340291,
    0.95373000642576114,
    0.96049126870802028,
    0.96663785155841657,
    0.97218287474858180,
    0.97714151463970571,
    0.98153114955374011,
    0.98537149959852037,
    0.98868475754742948,
    0.99149572117810613,
    0.99383196321275502,
    0.99572410469840719,
    0.99720625937222196,
    0.99831663531840739,
    0.99909812496766760,
    0.99959879967191068,
    0.99987288812035761,
    0.99998243035489160};

inline constexpr double kGaussPattersonWeights6[127] = {
    5.0536095207862518e-5,
    0.00018073956444538836,
    0.00037774664632698466,
    0.00063260731936263354,
    0.00093836984854238150,
    0.0012895240826104174,
    0.0016811428654214699,
    0.0021088152457266329,
    0.0025687649437940204,
    0.0030577534101755311,
    0.0035728927835172996,
    0.0041115039786546930,
    0.0046710503721143217,
    0.0052491234548088591,
    0.0058434498758356395,
    0.0064519000501757369,
    0.0070724899954335555,
    0.0077033752332797418,
    0.0083428387539681577,
    0.0089892757840641357,
    0.0096411777297025367,
    0.010297116957956356,
    0.010955733387837902,
    0.011615723319955135,
    0.012275830560082770,
    0.012934839663607373,
    0.013591571009765547,
    0.014244877372916774,
    0.014893641664815182,
    0.015536775555843982,
    0.016173218729577720,
    0.016801938574103865,
    0.017421930159464174,
    0.018032216390391286,
    0.018631848256138790,
    0.019219905124727766,
    0.019795495048097499,
    0.020357755058472159,
    0.020905851445812024,
    0.021438980012503867,
    0.021956366305317825,
    0.022457265826816099,
    0.022940964229387749,
    0.023406777495314006,
    0.023854052106038540,
    0.024282165203336599,
    0.024690524744487677,
    0.025078569652949769,
    0.025445769965464766,
    0.025791626976024229,
    0.026115673376706098,
    0.026417473395058260,
    0.026696622927450360,
    0.026952749667633032,
    0.027185513229624792,
    0.027394605263981433,
    0.027579749566481873,
    0.027740702178279682,
    0.027877251476613702,
    0.027989218255238160,
    0.028076455793817247,
    0.028138849915627151,
    0.028176319033016602,
    0.028188814180192359,
    0.028176319033016602,
    0.028138849915627151,
    0.028076455793817247,
    0.027989218255238160,
    0.027877251476613702,
    0.027740702178279682,
    0.027579749566481873,
    0.027394605263981433,
    0.027185513229624792,
    0.026952749667633032,
    0.026696622927450360,
    0.026417473395058260,
    0.026115673376706098,
    0.025791626976024229,
    0.025445769965464766,
    0.025078569652949769,
    0.024690524744487677,
    0.024282165203336599,
    0.023854052106038540,
    0.023406777495314006,
    0.022940964229387749,
    0.022457265826816099,
    0.021956366305317825,
    0.021438980012503867,
    0.020905851445812024,
    0.020357755058472159,
    0.019795495048097499,
    0.019219905124727766,
    0.018631848256138790,
    0.018032216390391286,
    0.017421930159464174,
    0.016801938574103865,
    0.016173218729577720,
    0.015536775555843982,
    0.014893641664815182,
    0.014244877372916774,
    0.013591571009765547,
    0.012934839663607373,
    0.012275830560082770,
    0.011615723319955135,
    0.010955733387837902,
    0.010297116957956356,
    0.0096411777297025367,
    0.0089892757840641357,
    0.0083428387539681577,
    0.0077033752332797418,
    0.0070724899954335555,
    0.0064519000501757369,
    0.0058434498758356395,
    0.0052491234548088591,
    0.0046710503721143217,
    0.0041115039786546930,
    0.0035728927835172996,
    0.0030577534101755311,
    0.0025687649437940204,
    0.0021088152457266329,
    0.0016811428654214699,
    0.0012895240826104174,
    0.00093836984854238150,
    0.00063260731936263354,
    0.00037774664632698466,
    0.00018073956444538836,
    5.0536095207862518e-5};

inline constexpr double kGaussPattersonNodes7[255] = {
    -0.99999759637974846,
    -0.99998243035489160,
    -0.99994399620705438,
    -0.99987288812035761,
    -0.99976049092443205,
    -0.99959879967191068,
    -0.99938033802502358,
    -0.99909812496766760,
    -0.99874561446809511,
    -0.99831663531840739,
    -0.99780535449595727,
    -0.99720625937222196,
    -0.99651414591489027,
    -0.99572410469840719,
    -0.99483150280062100,
    -0.99383196321275502,
    -0.99272134428278862,
    -0.99149572117810613,
    -0.99015137040077016,
    -0.98868475754742948,
    -0.98709252795403407,
    -0.98537149959852037,
    -0.98351865757863273,
    -0.98153114955374011,
    -0.97940628167086268,
    -0.97714151463970571,
    -0.97473445975240267,
    -0.97218287474858180,
    -0.96948465950245923,
    -0.96663785155841657,
    -0.96364062156981213,
    -0.96049126870802028,
    -0.95718821610986096,
    -0.95373000642576114,
    -0.95011529752129488,
    -0.94634285837340291,
    -0.94241156519108306,
    -0.93832039777959288,
    -0.93406843615772579,
    -0.92965485742974006,
    -0.92507893290707565,
    -0.92034002547001242,
    -0.91543758715576504,
    -0.91037115695700429,
    -0.90514035881326160,
    -0.89974489977694004,
    -0.89418456833555902,
    -0.88845923287225700,
    -0.88256884024734191,
    -0.87651341448470527,
    -0.87029305554811391,
    -0.86390793819369048,
    -0.85735831088623216,
    -0.85064449476835028,
    -0.84376688267270860,
    -0.83672593816886874,
    -0.82952219463740140,
    -0.82215625436498041,
    -0.81462878765513741,
    -0.80694053195021761,
    -0.79909229096084140,
    -0.79108493379984836,
    -0.78291939411828302,
    -0.77459666924148338,
    -0.76611781930376009,
    -0.75748396638051364,
    -0.74869629361693660,
    -0.73975604435269476,
    -0.73066452124218126,
    -0.72142308537009892,
    -0.71203315536225203,
    -0.70249620649152708,
    -0.69281376977911470,
    -0.68298743109107923,
    -0.67301883023041848,
    -0.66290966002478060,
    -0.65266166541001750,
    -0.64227664250975951,
    -0.63175643771119423,
    -0.62110294673722640,
    -0.61031811371518640,
    -0.59940393024224289,
    -0.58836243444766254,
    -0.57719571005204581,
    -0.56590588542365442,
    -0.55449513263193255,
    -0.54296566649831149,
    -0.53131974364437562,
    -0.51955966153745702,
    -0.50768775753371660,
    -0.49570640791876146,
    -0.48361802694584103,
    -0.47142506587165888,
    -0.45913001198983233,
    -0.44673538766202847,
    -0.43424374934680256,
    -0.42165768662616330,
    -0.40897982122988867,
    -0.39621280605761594,
    -0.38335932419873035,
    -0.37042208795007823,
    -0.35740383783153215,
    -0.34430734159943802,
    -0.33113539325797683,
    -0.31789081206847668,
    -0.30457644155671404,
    -0.29119514851824668,
    -0.27774982202182432,
    -0.26424337241092676,
    -0.25067873030348318,
    -0.23705884558982973,
    -0.22338668642896688,
    -0.20966523824318119,
    -0.19589750271110015,
    -0.18208649675925220,
    -0.16823525155220746,
    -0.15434681148137811,
    -0.14042423315256017,
    -0.12647058437230197,
    -0.11248894313318663,
    -0.098482396598119202,
    -0.084454040083710884,
    -0.070406976042855179,
    -0.056344313046592790,
    -0.042269164765363603,
    -0.028184648949745694,
    -0.014093886410782463,
    0.0,
    0.014093886410782463,
    0.028184648949745694,
    0.042269164765363603,
    0.056344313046592790,
    0.070406976042855179,
    0.084454040083710884,
    0.098482396598119202,
    0.11248894313318663,
    0.12647058437230197,
    0.14042423315256017,
    0.15434681148137811,
    0.16823525155220746,
    0.18208649675925220,
    0.19589750271110015,
    0.20966523824318119,
    0.22338668642896688,
    0.23705884558982973,
    0.25067873030348318,
    0.26424337241092676,
    0.27774982202182432,
    0.29119514851824668,
    0.30457644155671404,
    0.31789081206847668,
    0.33113539325797683,
    0.34430734159943802,
    0.35740383783153215,
    0.37042208795007823,
    0.38335932419873035,
    0.39621280605761594,
    0.40897982122988867,
    0.42165768662616330,
    0.43424374934680256,
    0.44673538766202847,
    0.45913001198983233,
    0.47142506587165888,
    0.48361802694584103,
    0.49570640791876146,
    0.50768775753371660,
    0.51955966153745702,
    0.53131974364437562,
    0.54296566649831149,
    0.55449513263193255,
    0.56590588542365442,
    0.57719571005204581,
    0.58836243444766254,
    0.59940393024224289,
    0.61031811371518640,
    0.62110294673722640,
    0.63175643771119423,
    0.64227664250975951,
    0.65266166541001750,
    0.66290966002478060,
    0.67301883023041848,
    0.68298743109107923,
    0.69281376977911470,
    0.70249620649152708,
    0.71203315536225203,
    0.72142308537009892,
    0.73066452124218126,
    0.73975604435269476,
    0.74869629361693660,
    0.75748396638051364,
    0.76611781930376009,
    0.77459666924148338,
    0.78291939411828302,
    0.79108493379984836,
    0.79909229096084140,
    0.80694053195021761,
    0.81462878765513741,
    0.82215625436498041,
    0.82952219463740140,
    0.83672593816886874,
    0.84376688267270860,
    0.85064449476835028,
    0.85735831088623216,
    0.86390793819369048,
    0.87029305554811391,
    0.87651341448470527,
    0.88256884024734191,
    0.88845923287225700,
    0.89418456833555902,
    0.89974489977694004,
    0.90514035881326160,
    0.91037115695700429,
    0.91543758715576504,
    0.92034002547001242,
    0.92507893290707565,
    0.92965485742974006,
    0.93406843615772579,
    0.93832039777959288,
    0.94241156519108306,
    0.94634285837340291,
    0.95011529752129488,
    0.95373000642576114,
    0.95718821610986096,
    0.96049126870802028,
    0.96364062156981213,
    0.96663785155841657,
    0.96948465950245923,
    0.97218287474858180,
    0.97473445975240267,
    0.97714151463970571,
    0.97940628167086268,
    0.98153114955374011,
    0.98351865757863273,
    0.98537149959852037,
    0.98709252795403407,
    0.98868475754742948,
    0.99015137040077016,
    0.99149572117810613,
    0.99272134428278862,
    0.99383196321275502,
    0.99483150280062100,
    0.99572410469840719,
    0.99651414591489027,
    0.99720625937222196,
    0.99780535449595727,
    0.99831663531840739,
    0.99874561446809511,
    0.99909812496766760,
    0.99938033802502358,
    0.99959879967191068,
    0.99976049092443205,
    0.99987288812035761,
    0.99994399620705438,
    0.99998243035489160,
    0.99999759637974846};

inline constexpr double kGaussPattersonWeights7[255] = {
    6.9379364324108267e-6,
    2.5157870384280661e-5,
    5.3275293669780613e-5,
    9.0372734658751149e-5,
    0.00013575491094922872,
    0.00018887326450650491,
    0.00024921240048299729,
    0.00031630366082226448,
    0.00038974528447328229,
    0.00046918492424785041,
    0.00055429531493037471,
    0.00064476204130572478,
    0.00074028280424450333,
    0.00084057143271072246,
    0.00094536151685852538,
    0.0010544076228633168,
    0.0011674841174299594,
    0.0012843824718970102,
    0.0014049079956551446,
    0.0015288767050877656,
    0.0016561127281544526,
    0.0017864463917586498,
    0.0019197129710138724,
    0.0020557519893273465,
    0.0021944069253638388,
    0.0023355251860571609,
    0.0024789582266575679,
    0.0026245617274044296,
    0.0027721957645934510,
    0.0029217249379178198,
    0.0030730184347025783,
    0.0032259500250878685,
    0.0033803979910869204,
    0.0035362449977167777,
    0.0036933779170256508,
    0.0038516876166398709,
    0.0040110687240750234,
    0.0041714193769840789,
    0.0043326409680929829,
    0.0044946378920320679,
    0.0046573172997568548,
    0.0048205888648512683,
    0.0049843645647655386,
    0.0051485584789781778,
    0.0053130866051870566,
    0.0054778666939189508,
    0.0056428181013844442,
    0.0058078616599775674,
    0.0059729195655081658,
    0.0061379152800413850,
    0.0063027734490857587,
    0.0064674198318036867,
    0.0066317812429018879,
    0.0067957855048827734,
    0.0069593614093904229,
    0.0071224386864583872,
    0.0072849479805538071,
    0.0074468208324075910,
    0.0076079896657190566,
    0.0077683877779219912,
    0.0079279493342948491,
    0.0080866093647888600,
    0.0082443037630328680,
    0.0084009692870519326,
    0.0085565435613076896,
    0.0087109650797320869,
    0.0088641732094824943,
    0.0090161081951956432,
    0.0091667111635607884,
    0.0093159241280693951,
    0.0094636899938300653,
    0.0096099525623638830,
    0.0097546565363174115,
    0.0098977475240487497,
    0.010039172044056841,
    0.010178877529236080,
    0.010316812330947622,
    0.010452925722906012,
    0.010587167904885198,
    0.010719490006251934,
    0.010849844089337314,
    0.010978183152658912,
    0.011104461134006927,
    0.011228632913408049,
    0.011350654315980597,
    0.011470482114693874,
    0.011588074033043953,
    0.011703388747657003,
    0.011816385890830236,
    0.011927026053019270,
    0.012035270785279563,
    0.012141082601668300,
    0.012244424981611986,
    0.012345262372243838,
    0.012443560190714035,
    0.012539284826474884,
    0.012632403643542079,
    0.012722884982732383,
    0.012810698163877362,
    0.012895813488012115,
    0.012978202239537399,
    0.013057836688353049,
    0.013134690091960153,
    0.013208736697529130,
    0.013279951743930531,
    0.013348311463725180,
    0.013413793085110099,
    0.013476374833816516,
    0.013536035934956214,
    0.013592756614812396,
    0.013646518102571291,
    0.013697302631990716,
    0.013745093443001897,
    0.013789874783240937,
    0.013831631909506429,
    0.013870351089139841,
    0.013906019601325461,
    0.013938625738306851,
    0.013968158806516939,
    0.013994609127619080,
    0.014017968039456609,
    0.014038227896908623,
    0.014055382072649964,
    0.014069424957813575,
    0.014080351962553661,
    0.014088159516508301,
    0.014092845069160408,
    0.014094407090096179,
    0.014092845069160408,
    0.014088159516508301,
    0.014080351962553661,
    0.014069424957813575,
    0.014055382072649964,
    0.014038227896908623,
    0.014017968039456609,
    0.013994609127619080,
    0.013968158806516939,
    0.013938625738306851,
    0.013906019601325461,
    0.013870351089139841,
    0.013831631909506429,
    0.013789874783240937,
    0.013745093443001897,
    0.013697302631990716,
    0.013646518102571291,
    0.013592756614812396,
    0.013536035934956214,
    0.013476374833816516,
    0.013413793085110099,
    0.013348311463725180,
    0.013279951743930531,
    0.013208736697529130,
    0.013134690091960153,
    0.013057836688353049,
    0.012978202239537399,
    0.012895813488012115,
    0.012810698163877362,
    0.012722884982732383,
    0.012632403643542079,
    0.012539284826474884,
    0.012443560190714035,
    0.012345262372243838,
    0.012244424981611986,
    0.012141082601668300,
    0.012035270785279563,
    0.011927026053019270,
    0.011816385890830236,
    0.011703388747657003,
    0.011588074033043953,
    0.011470482114693874,
    0.011350654315980597,
    0.011228632913408049,
    0.011104461134006927,
    0.010978183152658912,
    0.010849844089337314,
    0.010719490006251934,
    0.010587167904885198,
    0.010452925722906012,
    0.010316812330947622,
    0.010178877529236080,
    0.010039172044056841,
    0.0098977475240487497,
    0.0097546565363174115,
    0.0096099525623638830,
    0.0094636899938300653,
    0.0093159241280693951,
    0.0091667111635607884,
    0.0090161081951956432,
    0.0088641732094824943,
    0.0087109650797320869,
    0.0085565435613076896,
    0.0084009692870519326,
    0.0082443037630328680,
    0.0080866093647888600,
    0.0079279493342948491,
    0.0077683877779219912,
    0.0076079896657190566,
    0.0074468208324075910,
    0.0072849479805538071,
    0.0071224386864583872,
    0.0069593614093904229,
    0.0067957855048827734,
    0.0066317812429018879,
    0.0064674198318036867,
    0.0063027734490857587,
    0.0061379152800413850,
    0.0059729195655081658,
    0.0058078616599775674,
    0.0056428181013844442,
    0.0054778666939189508,
    0.0053130866051870566,
    0.0051485584789781778,
    0.0049843645647655386,
    0.0048205888648512683,
    0.0046573172997568548,
    0.0044946378920320679,
    0.0043326409680929829,
    0.0041714193769840789,
    0.0040110687240750234,
    0.0038516876166398709,
    0.0036933779170256508,
    0.0035362449977167777,
    0.0033803979910869204,
    0.0032259500250878685,
    0.0030730184347025783,
    0.0029217249379178198,
    0.0027721957645934510,
    0.0026245617274044296,
    0.0024789582266575679,
    0.0023355251860571609,
    0.0021944069253638388,
    0.0020557519893273465,
    0.0019197129710138724,
    0.0017864463917586498,
    0.0016561127281544526,
    0.0015288767050877656,
    0.0014049079956551446,
    0.0012843824718970102,
    0.0011674841174299594,
    0.0010544076228633168,
    0.00094536151685852538,
    0.00084057143271072246,
    0.00074028280424450333,
    0.00064476204130572478,
    0.00055429531493037471,
    0.00046918492424785041,
    0.00038974528447328229,
    0.00031630366082226448,
    0.00024921240048299729,
    0.00018887326450650491,
    0.00013575491094922872,
    9.0372734658751149e-5,
    5.3275293669780613e-5,
    2.5157870384280661e-5,
    6.9379364324108267e-6};

}  // namespace apf::detail
