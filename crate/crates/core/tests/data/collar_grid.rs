// (l, d, collar width, injectivity radius at distance d), 50-digit evaluation rounded to 20.
#[allow(dead_code)]
pub const COLLAR_GRID: [(f64, f64, f64, f64); 100] = [
    (0.02, 0.0, 5.2983256998327592206, 0.88140894221128573922),
    (0.04, 1.7211366685466238, 4.6052035185436687716, 0.17849045739825429473),
    (0.06, 3.139229550219778, 4.199780073942676113, 0.048501642742135235897),
    (0.08, 0.4346840362576038, 3.912156326318434402, 0.60983709308036064081),
    (0.1, 1.7886486094888066, 3.6890877570706633417, 0.17020658155351716592),
    (0.12, 3.0109385446318506, 3.5068578343359201633, 0.06751974565423449195),
    (0.14, 0.7450700964779923, 3.3528154341509656362, 0.46132602218863746483),
    (0.16, 1.91863766254159, 3.2194089591799563612, 0.15729688131747879093),
    (0.18, 3.0077745168056276, 3.1017674704558035226, 0.090396775359167418228),
    (0.2, 0.9988550403725538, 2.9965651211176616483, 0.36767575194536891646),
    (0.22, 2.051515960788651, 2.9014297159725210329, 0.1519015694534704846),
    (0.24, 0.1990128077621693, 2.8146097097792519499, 0.75352935960686246963),
    (0.26, 1.2154555358600547, 2.7347749556851231391, 0.30723917993149018986),
    (0.28, 2.177093049865137, 2.6608915053907227728, 0.15657817362043534492),
    (0.3, 0.4712981287988929, 2.5921397083939108714, 0.60007095123612853621),
    (0.32, 1.40436599865862, 2.527858797585516007, 0.2699299550098251544),
    (0.34, 2.2930380198846816, 2.467508304006342455, 0.17256869850188534046),
    (0.36, 0.7061472222233898, 2.4106405172453652765, 0.4937047338830450333),
    (0.38, 1.5712536011319689, 2.3568804016979534732, 0.25059948754720958993),
    (0.4, 0.06987608091976096, 2.3059106703521116986, 0.84747467052164778763),
    (0.42, 0.9121052541799578, 2.2574605040953957773, 0.42111358452163714697),
    (0.44, 1.7198975870830964, 2.2112968976782669698, 0.2465922648148578242),
    (0.46, 0.30647526296277594, 2.1672179309510582869, 0.7041991111384974237),
    (0.48, 1.094721425595323, 2.1250474732144506785, 0.37393815020395473468),
    (0.5, 1.8530053060665561, 2.0846309693248756963, 0.25659405163432532428),
    (0.52, 0.5166242557483534, 2.0458320527634792401, 0.59873932790058772874),
    (0.54, 1.257867146381914, 2.0085297982549918241, 0.34697219305056289149),
    (0.56, 1.9726164742767665, 1.9726164742767664248, 0.28000000000000002665),
    (0.58, 0.7047257055029074, 1.9379956901329951778, 0.52333025333819840207),
    (0.6, 1.4043879048655181, 1.9045808572833738348, 0.33700047551897372638),
    (0.62, 0.1891205962689378, 1.8722939030624840746, 0.7916667431521793083),
    (0.64, 0.8740405744257906, 1.8410641886841119905, 0.47217174936894217475),
    (0.66, 1.5364597765519294, 1.810827593793345392, 0.3420407709120163165),
    (0.68, 0.3778993989102872, 1.7815257377199252916, 0.69144654160365654928),
    (0.7000000000000001, 1.0270717999137826, 1.7531053136459390807, 0.44109665523462311532),
    (0.72, 1.6557996371357386, 1.7255175165940857556, 0.36083918890784919295),
    (0.74, 0.5490804201395061, 1.6987175498065970271, 0.61743223029639024815),
    (0.76, 1.1657962584919175, 1.6726641969666642658, 0.42717740490852857912),
    (0.78, 0.09983754242405038, 1.6473194499968309769, 0.86886461912233870846),
    (0.8, 0.7047865849648673, 1.622648183988880644, 0.5656230523665018927),
    (0.8200000000000001, 1.2918124220445326, 1.5986178722801090575, 0.42836074018782747971),
    (0.84, 0.27048860312912015, 1.5751983358695820082, 0.77565419117242420974),
    (0.86, 0.8467426485407518, 1.552361522324711649, 0.53283474677121007073),
    (0.88, 1.4064383759589552, 1.5300813101091929094, 0.44316376489064528649),
    (0.9, 0.4265993270434515, 1.5083333349036320117, 0.70526902020156650379),
    (0.92, 0.9763753967289075, 1.4870948350178746309, 0.51660087559171385872),
    (0.9400000000000001, 0.02962312148345238, 1.4663445134308927534, 0.93910643051821436433),
    (0.96, 0.5696609511104682, 1.4460624143573423284, 0.65489395696874855115),
    (0.98, 1.0948834924574185, 1.4262298125432161422, 0.51501849344889174011),
    (1.0, 0.18473513614863474, 1.4068291137472952528, 0.85362269706033173583),
    (1.02, 0.7009311944843841, 1.387843765079080597, 0.62210894467833103422),
    (1.04, 1.2032874862816378, 1.3692581740446223651, 0.52658414168433996374),
    (1.06, 0.3275291237102657, 1.3510576353048461336, 0.78809888822060343813),
    (1.08, 0.8214840820318793, 1.3332282642812468323, 0.60488966202764271518),
    (1.1, 1.302466462745319, 1.3157569368549651703, 0.55004420528135099488),
    (1.12, 0.4591120526011444, 1.2986312345003798968, 0.74049453191634896371),
    (1.1400000000000001, 0.9322468322007247, 1.2818393942759964541, 0.60155255849390239087),
    (1.16, 0.11503366028779069, 1.2653702631656975734, 0.92690506769207553747),
    (1.18, 0.5804425231404868, 1.2492132563240910267, 0.70894823989728173977),
    (1.2, 1.034027681445182, 1.233358318832205222, 0.61067379273146191312),
    (1.22, 0.2460193718414835, 1.2177958906153433716, 0.86689959348913306946),
    (1.24, 0.6923582003053478, 1.2025168742145511994, 0.69180472104446027842),
    (1.26, 1.127537221039848, 1.1875126051377124507, 0.63100368957218102438),
    (1.28, 0.3672325208175896, 1.172774824546495623, 0.8229111961693269749),
    (1.3, 0.7955970149111599, 1.1582956540618355953, 0.68760263142381552342),
    (1.32, 0.05778119052999302, 1.1440675724938618564, 0.99666098168006743763),
    (1.34, 0.47942931880353495, 1.1300833943226182151, 0.79347725956550183161),
    (1.36, 0.890813775072126, 1.1163362497739299135, 0.6950388568664325466),
    (1.3800000000000001, 0.178233465268797, 1.1028195663506812793, 0.94247857314355595695),
    (1.4000000000000001, 0.5832821589876128, 1.0895270516938429151, 0.77723284594578075713),
    (1.42, 0.9785933433273325, 1.0764526776600659171, 0.71292377777588574022),
    (1.44, 0.29007018150374764, 1.0635906655137415656, 0.90261500376485517498),
    (1.46, 0.6793926284549734, 1.0509354721412869017, 0.77291522614434227757),
    (1.48, 0.010489714921254518, 1.0384817772041972394, 1.063797807181795463),
    (1.5, 0.3939043424636328, 1.0262244711552538834, 0.87589040846637949489),
    (1.52, 0.7683020030676389, 1.0141586440492833424, 0.77935164766281103262),
    (1.54, 0.12148843334377492, 1.0022795750861431416, 1.0155196471558607443),
    (1.56, 0.49028841837002735, 0.99058272282923887411, 0.86116234204825597771),
    (1.58, 0.8504997937386085, 0.97906371604793302098, 0.79543904999090293007),
    (1.6, 0.22482345392065983, 0.96771834513675312674, 0.98005492783575538193),
    (1.62, 0.5797227600414558, 0.95654255406840204606, 0.8573358119737948188),
    (1.6400000000000001, 0.9264307675313413, 0.94553243284126608569, 0.82012315621862172022),
    (1.6600000000000001, 0.3210026581121754, 0.93468421038545181733, 0.95642511323687529909),
    (1.68, 0.6626625414192145, 0.92399424789439785981, 0.86336269733776714834),
    (1.7, 0.07381487131732019, 0.91345903255183699738, 1.0866068400111532067),
    (1.72, 0.4104887143756186, 0.90307517162636093005, 0.94365694365679691751),
    (1.74, 0.7395235325905322, 0.89283938690808137655, 0.87823544465606438202),
    (1.76, 0.16941638060418776, 0.88274850946392565778, 1.0556495750731834954),
    (1.78, 0.49370475335997627, 0.87279947468995819406, 0.94079359506412216749),
    (1.8, 0.8106869347534883, 0.86298931764081009786, 0.90097960998342896604),
    (1.82, 0.25858035412661795, 0.85331516861783944233, 1.0353391669548711914),
    (1.84, 0.5710391382114787, 0.8437742489990506078, 0.94689961720543986548),
    (1.86, 0.03371167140586204, 0.83436386729508533856, 1.1562390829674749356),
    (1.8800000000000001, 0.34170038416250176, 0.8250814154167724875, 1.0248317188318928793),
    (1.9000000000000001, 0.6428494998079017, 0.81592436514079835252, 0.96106226210101745479),
    (1.92, 0.12225610072137039, 0.80689026476104448533, 1.1297810782544234839),
    (1.94, 0.4191392956316182, 0.79797673591404238241, 1.0232835312887229761),
    (1.96, 0.7094661705104696, 0.7891814705678256838, 0.982391800575233943),
    (1.98, 0.2049803831542393, 0.78050222816421877452, 1.1128934491591200014),
    (2.0, 0.4912325300306485, 0.77193683290530472507, 1.0298584542593693784),
];
