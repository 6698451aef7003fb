"""Baked optimization presets (generated by tools/bake_presets.py).

Converged (alpha, gamma, a1, a2, b2, b3, p) tuples keyed by
(n, m, lam, parity, R); node positions are re-derived from orthogonality
at load time, so they are not stored.
"""

BAKED = {
    (0, 0, 0, -1, 0.1): (
        -0.5199940276751904, 0.1045906632413717, 0.18213844232091944, -0.006379856766791423,
        0.002820797787707001, -5.377628487374909e-05, 0.05003353921959873,
    ),
    (0, 0, 0, -1, 0.2): (
        -0.32490923776820774, 0.1526484663985905, 0.09125367804963172, 0.03210667118979757,
        0.028525134391897994, -0.0005691996633349987, 0.10026722125800869,
    ),
    (0, 0, 0, -1, 0.5): (
        -0.20657980805515858, 0.3657150188529088, 0.23635749658270844, 0.08196062705515647,
        0.07276493653937524, -0.0013125282875415555, 0.2541829137310535,
    ),
    (0, 0, 0, -1, 1.0): (
        0.11993716973023551, 0.6538668199985043, 0.024369029513957034, 0.013891990341705613,
        0.2197595367263409, 0.0007558316508489058, 0.5314099096639421,
    ),
    (0, 0, 0, -1, 1.997193): (
        0.9076525712696315, 0.8912839171236694, 1.0603319901837311, 0.1848383403164784,
        0.20271762569801371, 0.0030223792633662944, 1.153658259838855,
    ),
    (0, 0, 0, -1, 2.0): (
        0.9097519965606865, 0.8915935054361277, 0.9923635237448665, 0.1156248009362113,
        0.13059150351389148, 0.002311749771094603, 1.1554457423278568,
    ),
    (0, 0, 0, -1, 4.0): (
        2.1666708338546776, 0.9413909868328691, 1.9118851107435033, 0.1342721952709574,
        0.14811322327019016, 0.0018790626774995687, 2.3588636341841034,
    ),
    (0, 0, 0, -1, 6.0): (
        3.240893862252695, 0.9546940632044791, 2.8715920603381653, 0.323088031382891,
        0.35207789216181073, 0.01078877130692123, 3.439700689399362,
    ),
    (0, 0, 0, -1, 10.0): (
        5.318553017814258, 0.9791471254098824, 4.809934351400752, 0.9288262380897212,
        0.9848007012179527, 0.07311070862559021, 5.476828643632892,
    ),
    (0, 0, 0, -1, 12.54525): (
        6.5532458807143215, 0.9749646425197909, 6.076268325768582, 1.4850122635562348,
        1.5531040170831114, 0.17272745197821357, 6.75452374792266,
    ),
    (0, 0, 0, -1, 20.0): (
        10.342844293745944, 0.9888833658427779, 9.823786456885362, 3.0957728497697987,
        3.163232081591552, 0.6906707962299348, 10.488202985430675,
    ),
    (0, 0, 0, -1, 30.0): (
        15.634845353748808, 1.0117771706096206, 15.091054072504761, 7.033280202813445,
        7.056132115712907, 1.3830391886673836, 15.492087262701366,
    ),
    (0, 0, 0, -1, 40.0): (
        20.759156102754822, 1.0147439879662823, 18.854758370748797, 12.387213657845304,
        12.465294048059679, 2.544158126414537, 20.49419510159224,
    ),
    (0, 0, 0, 1, 0.1): (
        0.10759770153267496, 1.0867953593956599, 0.06645062473457712, 0.0042252706789542085,
        0.0022341006206136717, 7.126110040838214e-05, 0.09945455981659782,
    ),
    (0, 0, 0, 1, 0.2): (
        0.21327900234341673, 1.0960565290802085, 0.11912814583021056, 0.0018899354038491608,
        0.0026240387978172922, -2.7932602516326946e-06, 0.19639844957504796,
    ),
    (0, 0, 0, 1, 0.5): (
        0.5012449542536361, 1.098062303933168, 0.2878134753483679, 0.014208040050741128,
        0.01968769201578373, 7.478797724205716e-05, 0.4656955517900052,
    ),
    (0, 0, 0, 1, 1.0): (
        0.8887063793447733, 1.0718281014962998, 0.504418057967668, 0.010319150487492698,
        0.00898272617365018, -0.00010027909433206036, 0.8519905995665586,
    ),
    (0, 0, 0, 1, 1.997193): (
        1.4818589096917874, 1.0279812405936077, 0.9165885031158547, 0.05431672795476958,
        0.06070252660497595, 0.00014377190507730336, 1.4833997572096542,
    ),
    (0, 0, 0, 1, 2.0): (
        1.4894419445669516, 1.0332282563099442, 0.9176166625574447, 0.054283402488452245,
        0.060603730427967135, 0.00013296015987015184, 1.4850206759117097,
    ),
    (0, 0, 0, 1, 4.0): (
        2.125502811059433, 0.8213811874061181, 1.6976223608203427, 0.15831481348851595,
        0.16485382012862648, -0.008248152107936996, 2.5236197169368157,
    ),
    (0, 0, 0, 1, 6.0): (
        3.3240395109772747, 0.9636531388736637, 2.597356619518415, 0.53444649998005,
        0.5880935567849603, 0.0055202803699240565, 3.49506075223056,
    ),
    (0, 0, 0, 1, 10.0): (
        4.752267743961552, 0.854841247384692, 4.616855467493336, 2.259509313845932,
        2.3929390094027205, 0.30977200637666424, 5.480039721927902,
    ),
    (0, 0, 0, 1, 12.5): (
        5.704015137200804, 0.8320937530566281, 5.921961309654501, 4.2462949158076855,
        4.391430313387056, 1.426011486815572, 6.732705196685357,
    ),
    (0, 0, 0, 1, 20.0): (
        5.840540896212449, 0.5019473773751868, 9.849270455064785, 6.466713449496292,
        6.540300372290744, 1.6051595617629526, 10.5007335366297,
    ),
    (0, 0, 0, 1, 30.0): (
        13.37240443372173, 0.8557338222995431, 13.234331155945974, 16.224695477017825,
        16.378647613527068, 2.672119256966415, 15.492752040563555,
    ),
    (0, 0, 0, 1, 40.0): (
        17.916648274463768, 0.8688844913311247, 17.17175306033341, 27.214633289202148,
        27.359167629125555, 5.622127850133572, 20.494585263196345,
    ),
    (0, 0, 0, 1, 50.0): (
        22.71332115563434, 0.8871508864868913, 20.688002707489364, 42.129429498515734,
        42.27208087650604, 9.240095157331977, 25.49567731109062,
    ),
    (0, 0, 1, -1, 1.0): (
        0.3871836001633577, 0.12151647830042411, 0.5685707041564276, 0.10205069719074869,
        0.07058847910255601, 0.00027995992718257213, 0.3343321050777398,
    ),
    (0, 0, 1, -1, 2.0): (
        0.42450514774001713, 0.2458190875137964, 0.9435577110362863, 0.26139046155196605,
        0.20161025270770674, 0.005451673029759076, 0.6733461837064021,
    ),
    (0, 0, 1, -1, 4.0): (
        0.6857826607238076, 0.5939574996570007, 1.3267322408803222, 0.31022015623242494,
        0.3179970845883182, 0.021210190229353734, 1.3592720118264225,
    ),
    (0, 0, 1, -1, 6.0): (
        1.2970237162142566, 0.6736264045868325, 1.8232749025748305, 0.43413603626051134,
        0.4882298593604747, 0.013225544624246707, 2.023781634509527,
    ),
    (0, 0, 1, -1, 8.0): (
        1.7865702729684654, 0.6556236392614, 2.4308693253311335, 0.7909518402419787,
        0.8752109711267386, 0.04579838501162521, 2.649683576685065,
    ),
    (0, 0, 1, -1, 10.0): (
        2.3437660865878565, 0.7219713123601921, 3.016596967174311, 1.2950216611022385,
        1.3898522402916058, 0.2585480443124474, 3.239828426783964,
    ),
    (0, 0, 1, -1, 20.0): (
        4.423898039713319, 0.7216428506958206, 5.990340716437293, 5.1372661347221715,
        5.198733977182798, 0.8741967840811588, 5.906367986898172,
    ),
    (0, 0, 1, 1, 0.1): (
        0.04898646732671675, 0.9921203511527925, 0.04316351867200725, 0.004103211906112233,
        0.0013634027858272202, 1.3044048184492135e-05, 0.049983404259911116,
    ),
    (0, 0, 1, 1, 0.2): (
        0.09731820136317634, 0.996388498846168, 0.07231571561999811, -0.00031838544716005456,
        0.0032340012836380204, -3.712179753693363e-05, 0.09986876084221755,
    ),
    (0, 0, 1, 1, 0.5): (
        0.23607438955553628, 0.9936881670453955, 0.18688569022254647, -0.008509725431499375,
        0.022596723487095922, -0.0022905592929278176, 0.24807856326344502,
    ),
    (0, 0, 1, 1, 1.0): (
        0.4467013812464554, 0.9744887226293879, 0.3509828922079047, 0.05333355749000725,
        0.07551968777693047, 0.00010767735813938094, 0.4868820213451759,
    ),
    (0, 0, 1, 1, 2.0): (
        0.816273188794813, 0.9442797686346405, 0.5451582655159459, 0.07872020964388754,
        0.12224930734184662, 0.0018022112977002093, 0.9260374155355384,
    ),
    (0, 0, 1, 1, 4.0): (
        1.4136658708978298, 0.8981498426239356, 0.7467617976019402, -0.010309791511347723,
        -0.04249831013441647, -0.0016334503260333855, 1.6752923742459687,
    ),
    (0, 0, 1, 1, 6.0): (
        1.8982388424303887, 0.8630932615886739, 1.0962160010577282, 0.01377835583175455,
        -0.018271888644529943, -0.004448515870100974, 2.3121099520623503,
    ),
    (0, 0, 1, 1, 8.0): (
        2.31978606289332, 0.8349934076971579, 1.4466301905080414, 0.06129131762000144,
        0.03921198817361922, -0.008150917450795183, 2.8817320436761076,
    ),
    (0, 0, 1, 1, 10.0): (
        2.764669364358251, 0.8377027962467345, 1.8077330678593033, 0.12130954407873257,
        0.10747475641971665, -0.015346793616823088, 3.411265231161556,
    ),
    (0, 0, 1, 1, 20.0): (
        5.178127443516884, 0.8987268864826767, 4.162538365556461, 1.5352406505927703,
        1.7228867260971095, 0.13990363849785747, 5.918244402087358,
    ),
    (0, 0, 1, 1, 30.0): (
        5.203728342775813, 0.5285491604422823, 6.896757007057472, 6.076766060913705,
        6.305469172160457, 1.0606141862327012, 8.447697558922544,
    ),
    (0, 0, 1, 1, 40.0): (
        26.31500110029024, 2.634047205633526, 9.642138873779192, 9.337884265952876,
        9.485598182943829, 5.238105971972514, 11.100827720742707,
    ),
    (0, 0, 1, 1, 50.0): (
        35.70403591302255, 2.8675072464876035, 12.516628562186893, 11.415278150616032,
        11.44554776555249, 6.625640113588035, 13.650007634204286,
    ),
    (0, 0, 2, -1, 1.0): (
        -0.3180259767528785, 0.12670956202689615, 1.024294595633107, 0.7103315539901238,
        0.19699546921869723, 0.0030676491328421006, 0.24999798874928578,
    ),
    (0, 0, 2, -1, 2.0): (
        0.18315175058675034, 0.14601566480397898, 0.800177849838972, 0.1666366951974655,
        0.11252411357199875, 0.0014206860574139226, 0.49992559485582805,
    ),
    (0, 0, 2, -1, 6.0): (
        0.6036105370294949, 0.40732607920050046, 0.06874567395338474, -0.0006956797469680272,
        -0.07961425775382358, -0.0003620596399373854, 1.4886718633570013,
    ),
    (0, 0, 2, -1, 10.0): (
        1.2942651972653307, 0.462953969062719, 4.508540973040151e-05, -1.3538360322442501e-06,
        -0.23626151555876812, -1.1061310994718866e-06, 2.4250396713252482,
    ),
    (0, 0, 2, 1, 1.0): (
        0.23866718515372853, 0.7614481811898066, 0.15022965581510367, -0.020192933078553764,
        0.004577573150404501, -0.0015217848721152864, 0.33131673381526416,
    ),
    (0, 0, 2, 1, 2.0): (
        0.481691771206076, 0.7979045876671822, 0.31601489548368433, 0.015254239243852042,
        0.025819804792680697, 0.00011965887304248328, 0.6522787048256335,
    ),
    (0, 0, 2, 1, 4.0): (
        0.9220690673509182, 0.8063618304055518, 0.629712784453851, 0.06774864565056486,
        0.11298228581442958, 0.002082202683805273, 1.2472263301600988,
    ),
    (0, 0, 2, 1, 6.0): (
        1.3054949969066119, 0.7947413905622683, 0.9422701257374126, 0.16921597421498066,
        0.2756747461573047, 0.011641943758497262, 1.7818415329265194,
    ),
    (0, 0, 2, 1, 8.0): (
        1.2201231954466494, 0.47471759757130416, 0.8265356038675968, -0.017821999835599928,
        -0.0722324859340064, -0.0024716508857321757, 2.267839209423177,
    ),
    (0, 0, 2, 1, 10.0): (
        1.5681592185316353, 0.5294827345755089, 1.0605737596248797, 0.006905854224506983,
        -0.03411117185178528, -0.0037157070308581645, 2.7161013880952125,
    ),
    (0, 0, 2, 1, 20.0): (
        3.0836073695096298, 0.6473188474847539, 2.1394427262835345, 0.13949878508690844,
        0.10563351964829623, -0.030737531937813638, 4.623894381899487,
    ),
    (1, 0, 0, -1, 1.0): (
        -0.011689343152953887, 0.6385051079767836, 0.2753466563829197, 0.04148909848311602,
        0.0422205941850556, 0.0008489530323685091, 0.34591277519507435,
    ),
    (1, 0, 0, -1, 2.0): (
        0.46121321617043853, 0.8395803790841965, 0.4438997961461685, 0.029033130655809515,
        0.022568512737926642, -0.0027093039143630034, 0.7147186673838137,
    ),
    (1, 0, 0, -1, 4.0): (
        1.147070428981182, 0.8752625006198101, 1.2584441811353886, 0.2367390510798213,
        0.26158078848102506, 0.0071348661970744, 1.4003116287209392,
    ),
    (1, 0, 0, -1, 6.0): (
        1.696659025619219, 0.8561149140633901, 1.8718209245227857, 0.5699000535466909,
        0.6177992335014614, 0.035128765139163395, 2.023310366104891,
    ),
    (1, 0, 0, -1, 10.0): (
        2.7252626255942527, 0.867631079501318, 2.9099447391760362, 1.229870967699286,
        1.3169791011763579, 0.22557794413102075, 3.1669916982319104,
    ),
    (1, 0, 0, 1, 1.0): (
        0.4707814235728516, 1.0865437829518143, 0.3348328999344448, 0.05997996840105671,
        0.08191741252758988, 0.0003920525621485324, 0.4598491067005892,
    ),
    (1, 0, 0, 1, 2.0): (
        0.8240219971265127, 1.0333265408460577, 0.5202030819919521, 0.033447579042128514,
        0.04429074757512922, 0.00044221294067803697, 0.8495449291814106,
    ),
    (1, 0, 0, 1, 4.0): (
        1.2399375872697984, 0.7681023720878666, 0.927031598671352, 0.022299897782898606,
        0.011712701454132442, -0.002079854524364557, 1.519240879052012,
    ),
    (1, 0, 0, 1, 6.0): (
        1.7413515279669132, 0.7982741563021064, 1.3695718008339548, 0.11787851322347496,
        0.12870757421738105, -0.001079166127975039, 2.110912048397638,
    ),
    (1, 0, 0, 1, 10.0): (
        2.7830551371990992, 0.8790210378904041, 2.3110869643974823, 0.3873169841030676,
        0.4248751554257303, -0.003972826887325495, 3.1993748628839462,
    ),
}
