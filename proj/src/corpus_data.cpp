// Generated by tools/corpus_gen. Do not edit by hand; regenerate with:
//   corpus_gen --write-data data/corpus.txt --write-source src/corpus_data.cpp
#include "sudotrans/corpus.hpp"

namespace sudotrans::detail {

const char* const kEmbeddedCorpusText = R"corpus(# sudotrans corpus v1 checksum=8248fc070d8c6c8f
u01 .......1.4.........2...........5.4.7..8...3....1.9....3..4..2...5.1........8.6... 1 693784512487512936125963874932651487568247391741398625319475268856129743274836159
u02 .......12....35......6...7.7.....3.....4..8..1...........12.....8.....4..5....6.. 1 673894512912735486845612973798261354526473891134589267469128735287356149351947628
u03 ..9.4.7.5..3...1.9...1.8.2..8........4.56...17......4.....5.........35....5..1..2 1 819342765423675189567198324981234657342567891756819243234756918198423576675981432
u04 ...........3..25.426..47....37..6...6..4.5...........9198.....5.7...124.......9.8 1 754839621983612574261547893837196452619425387542378169198264735375981246426753918
u05 .29.57..38..29........682...9..7..8..6..4.51...1......7.5..6.9..............2..5. 1 429157863836294175157368249294571386368942517571683924715836492942715638683429751
u06 ..5.....2..3.2..5..........7.4.........3.7.....651.3..5.9.7.8.....8....1.62..543. 1 195734682473628159628951743734286915951347268286519374519473826347862591862195437
u07 ..96.....6...4....1.7..95..8.......9..2...1.8.65..4.......8...4..32.....5.....96. 1 329658471658147293147329586814732659732965148965814327296581734473296815581473962
u08 ..8.2....6...84.2..1...6.8..4....7....74..19..21....58...3.......6..5.1....21...3 1 458921367673584921219736584845192736367458192921673458192367845736845219584219673
u09 2..6..8.39.....65..1...3..44.5..8..........1....2....6..3.7...9.............8247. 1 247651893938724651516893724465918237372546918189237546823475169754169382691382475
u10 7...6..1.4.....38.8.34....2.8..1.27.94.5...3.............7.5...5.78....4.......2. 1 752368419419257386863491752386914275941572638275683941194725863527836194638149527
u11 3.....15..27.6....6...........3......9...75.44....9.61...29...7.8....3....2.78.4. 1 349782156827561493615934278176345982298617534453829761564293817781456329932178645
u12 2..3......7.1........8..7....6..2...4......8..25..7..9..3.9...2.91.....3.8....1.6 1 258374961374169528169825734916582347437916285825437619743691852691258473582743196
u13 .54....7.1.7...38.2....1...7.3.........2.81...2..3..9.94..6.......7...1.3.....8.5 1 654382971197546382238971546713694258469258137825137694941865723586723419372419865
u14 ....4..5.......9.4..31...62..9..1..3.6.4..8.....8.9...59..1.32.......5......94... 1 726943158185726934943185762859261473261437895437859216594618327618372549372594681
u15 ..18...7..8.4....57..1.5..3........4......2..67......92....3...89.647..2.....23.. 1 521839476389476125746125983152398764938764251674251839215983647893647512467512398
u16 ....57.61.97.1..2.6...2......2........5....4.3..8..5...6......782..7..137...36.84 1 248957361597613428631428795482795136975361842316842579163284957824579613759136284
u17 7.4........9.75....3..264.....2.9....4786........3...69....2...42.3...89..3...5.. 1 754183962269475138831926457618259743347861295592734816986542371425317689173698524
u18 1..69.7....6..5..8..7.......2.....4..6.1....2..13.8....1.93......4.179..23.....7. 1 182693754396745218547281639823569147965174382471328596718932465654817923239456871
u19 95...48........1......6..5..385...4...23.........2..6.21..3..755...4..8...3957... 1 957214836386795124421863759638579241142386597795421368214638975579142683863957412
u20 .6...5.231...38..4.3....9...4.1..2..........7...6.7..991.8.34....6.....28....65.. 1 764915823159238764238764915647159238591382647382647159915823476476591382823476591
u21 .....7..487.3.6.2.64.12.7.5.....4..292..8..6.4..9......8.4.3.9.......8....9.7.... 1 192857634875346129643129785758634912921785463436912578587463291364291857219578346
u22 ..28.....9...1...8..79...14.4..3.6.9.8.6.9.4.....42..75.9....7.1.......637.....2. 1 412873965956214738837965214241738659783659142695142387569421873124387596378596421
u23 ...4...9..4.6.912.3.9......9.752..6.2....6....3..9.2...8...17.2.........691..5.38 1 172458396548639127369712584917524863254386971836197245483961752725843619691275438
u24 2351...6.......7.....49.2.....7.1....4.2....1..8....2..2.8176.4..63.2...7....95.2 1 235178469964523718817496253352781946649235871178964325523817694496352187781649532
u25 95...47.38......4664..........9...6.2...7.5....52.....519....78.3.1.9.2......3915 1 951624783873591246642837159387915462264378591195246837519462378738159624426783915
u26 .8...3..5.7....42.9...8...7498.....63.....849......7...36819.....97.2.5....53.9.. 1 284673195673951428951284367498327516327165849165498732536819274819742653742536981
u27 1...57...3...4.1....4..237.9..571.36...4...824....8......284791.48....5.......2.. 1 129357864375846129864192375982571436517463982436928517653284791248719653791635248
u28 5.49...8...6.......81..2.9......72..81..54.3.....96..7..8...3.96.3.18.5.452.3.... 1 524963781936871524781542693369187245817254936245396817178425369693718452452639178
u29 1....7.....9..5.7.6.4..92.1.51.7.8.38.3..1......8....2.12.46..8938.124...6....... 1 125467389389125674674389251251674893893251746746893512512746938938512467467938125
u30 2.3.....6..4.7.9......9..1..2...5..7....2.13.3.5...26.5.....3.193.5....276..31458 1 293154786154876923876293514629315847487629135315487269548762391931548672762931458
u31 ....3.4.631.6..9.26.4925......59.38...5.8........675...4...9.1.5.2..8..718..4..9. 1 259831476318674952674925138467592381925183764831467529746259813592318647183746295
u32 27.....8.4.91...2..61.7..4.....293..14.68..92.....1.5..1...72.9..82...6..9...6.75 1 275934186439168527861572943586729314143685792927341658614857239758293461392416875
u33 785..2.4194...8..6.6.4.15.8.....48..5.832...4..45.76...5.......4...7..62..3.4.7.. 1 785632941941758236362491578236914857578326194194587623857263419419875362623149785
u34 .57.68.3..125.948....1....7...23....423.9..5....6.5.4.291.5..6.78.3....1.3.9..... 1 957468132312579486846123597568234719423791658179685243291857364785346921634912875
u35 7.23....59...65.1...61......6...49.14.7.91.63.896..7...9..38.766...1.3...5..46... 1 712389645938465217546127839365274981427891563189653724291538476674912358853746192
u36 ...8279.67..5.6..3.95.437.8.34...56...7.5.1....6........2.6...15..4.1872.4..7...5 1 413827956728596413695143728134782569287659134956314287872965341569431872341278695
u37 ..42.13959.........163..478.2.953.8.59.8..26..87.12...7.....5.9....7.6.2...53...7 1 874261395935784126216395478621953784593847261487612953748126539359478612162539847
u38 .6429.7859.3.......8714......84...9.3.2.8.1..4..932..7..56..9.2....57.6..41..9..8 1 164293785923578614587146329758461293392785146416932857875614932239857461641329578
u39 37.841...95237......1.5...76..18527...52.....29763.1...68..9.3..2.46.......7..48. 1 376841925952376814841952367634185279185297643297634158468519732723468591519723486
u40 ..821.6.33...857.2....394...21...84..........96.8542..21.9.3.846...4.1...54.2.9.6 1 548217693396485712172639458721396845485172369963854271217963584639548127854721936
u41 ...75..1......12....63297..16.9.245..4..86.9...2475.684.7.189..9..5476..6....3... 1 239754816574861239816329745168932457745186392392475168457618923923547681681293574
u42 .7..4.....45..8.31...73...67.365.98..89.73....5.8.9...8..31746.5649.2.17.....5..8 1 371546829645298731928731546713654982289173654456829173892317465564982317137465298
u43 3.9..1...826.954.74..86.3...6......8..4...263178......9..7..63..3591.7.2..26.3941 1 359471826826395417417862359263549178594187263178236594941728635635914782782653941
u44 4....73.8....38..163...15...9.2....6.86..925.2..38...97.2.6.9..863.94.259.1..268. 1 419527368527638491638941572194275836386419257275386149752863914863194725941752683
u45 4...51...9..2468158..9..4..51837.6..37.....81.2.5..7.9.857.3.6..936.4...2....5.73 1 462851397937246815851937426518379642379462581624518739185793264793624158246185973
u46 2.5...3..483..57966..8..512132...4.....7.4.3.87431265...1.59..7.6......5.296....3 1 215967384483125796697843512132596478956784231874312659341259867768431925529678143
u47 4....18..8...7..9..19..6.7...8..3....7....6.....52.1...2.9...5.3.5..2.6..8....... 1 457291836863475291219836475198643527572189643634527189721968354345712968986354712
u48 .3.965.2......3......1..8..569.......1.8..5..8.....4.22.....95.....9.....56..47.8 1 738965124124783695695142873569421387412837569873659412241378956387596241956214738
u49 ..847.........57...7...6958.436......1.....23....42.9.1...6..4.4.......9.6.7..3.2 1 598473261621895734374126958243619875916587423785342196132968547457231689869754312
u50 ....9...59..51...3615..32..5.....7..3.....56.2....5.8..2..5..38..82....6.56.4..7. 1 843792615972516843615483297561834729384927561297165384729651438438279156156348972
u51 864..9.....284.593...........3.12.4.......35..863...7..59..78...21.8..3.6.8....17 1 864539721172846593935271486593712648217468359486395172359127864721684935648953217
u52 4....6.1.58.9....6.27185...758.4162.14.2.9............8.4....5......21.8.7.4189.. 1 439726815581934276627185394758341629143269587962857431814693752396572148275418963
u53 94..731.515.94.637......98...72.584.29..6.37.....1......1589..3.3.....9.5..4.6... 1 948673125152948637673152984317295846295864371864317259721589463436721598589436712
u54 ....9.3.8....61...4..328.6..75.8.....842.36....3.75984.4.....52.3.1.2.4.15274..39 1 561497328328561497497328561675984213984213675213675984746839152839152746152746839
m01 95.6....276...31........8.......4.......1..7.87...56.1..2.59..6.17....3.53...7... 3 951678342768423159243591867126784593395216478874935621482359716617842935539167284;951678342768423159243591867196784523325916478874235691482359716617842935539167284;951678342768423195243591867126784953395216478874935621482359716617842539539167284
m02 ....2.....6...513...8.....6..2......7..3...5961......8.3..82......7....31.....5.. 13 341627895267895134598134726952478361784316259613259478439582617825761943176943582;341627895267895134598134726952478361784361259613259478439582617825716943176943582;341627895267895134598143726952478361784316259613259478439582617825761943176934582;341627895267895134598143726952478361784361259613259478439582617825716943176934582;341627895267895134958134726592478361784316259613259478439582617825761943176943582;341627895267895134958134726592478361784361259613259478439582617825716943176943582;341627895267895134958143726592478361784316259613259478439582617825761943176934582;341627895267895134958143726592478361784361259613259478439582617825716943176934582;371926845269845137458137926592478361784361259613259478936582714825714693147693582;391624875267895134548137926952478361784316259613259748439582617825761493176943582;391624875267895134548137926952478361784361259613259748439582617825716493176943582;941623875267895134358147926592478361784316259613259748439582617825761493176934582;941623875267895134358147926592478361784361259613259748439582617825716493176934582
m03 ..3.1.....1.....784.9...6....4..1.92.95437..1.....2.....7....4......3...3...8.159 5 673918425512346978489275613734861592295437861168592734857129346941653287326784159;763918425512346978489275613634851792295437861178692534857129346941563287326784159;763918524512346978489275613634851792295437861178692435857129346941563287326784159;873615924516924378429378615734861592295437861168592437687159243951243786342786159;873916425612345978459278613734861592295437861168592734587129346941653287326784159
m04 ...79....79...8....583.29......7.....49.3..2....6.9.8.1..984.5...3.......8.52.... 3 312796548796458132458312976831275469649831725275649381167984253523167894984523617;312796548796458132458312976835271469649835721271649385167984253523167894984523617;312796548796458231458312976831275469649831725275649183167984352523167894984523617
m05 ......63.2.5.6.8....37..2...36..7.25........18....9....1.2..3....4..1.925..43.... 5 187952634295364817643718259436187925952643781871529463718295346364871592529436178;498152637275963814163784259936817425752346981841529763617295348384671592529438176;798152634245963817163784259436817925952346781871529463617295348384671592529438176;948152637275963814163784259436817925759326481821549763617295348384671592592438176;978152634245963817163784259436817925759326481821549763617295348384671592592438176
m06 1.....9....859..13..2.......253...7.34.....5...7...........7....7.2593..2..4.3.68 5 134678925768592413592134687925341876341786259687925134413867592876259341259413768;134768925768592413592134687925341876341876259687925134413687592876259341259413768;134786925768592413592134687625341879341978256987625134413867592876259341259413768;134786925768592413592134687925341876341678259687925134413867592876259341259413768;134876925768592413592134687925341876341768259687925134413687592876259341259413768
m07 .1...2...95...6.8....3..5...9.8.1.......3...6.35....18......8.5.6....29.5.3.2...1 12 314582679952476183786319542297861354841735926635294718129647835468153297573928461;314582769952476183687319524796841352841235976235697418129764835468153297573928641;314582769952476183786319524697841352841235976235697418129764835468153297573928641;316582479952476183748319562297861354481735926635294718129647835864153297573928641;316582479952476183784319562297861354841735926635294718129647835468153297573928641;316582749952746183478319562294861357781435926635297418129674835867153294543928671;316582749952746183487319562294861357871435926635297418129674835768153294543928671;317582469952746183486319527694871352871235946235694718129467835768153294543928671;317582469952746183684319527496871352871235946235694718129467835768153294543928671;317582649952746183486319572294861357871435926635297418129674835768153294543928761;318952467952746183746318529694871352871235946235694718429167835167583294583429671;318952764952476183476318529697841352841235976235697418729164835164583297583729641
m08 .....4..3.2.........3....8....5..24...29..157.5.....6.9...75..4...63.7157...2...6 4 178254693529386471643791582391567248862943157457812369936175824284639715715428936;571284693428396571693751482369517248842963157157842369936175824284639715715428936;571284693824396571693751482369517248482963157157842369936175824248639715715428936;671284593528396471493751682369517248842963157157842369936175824284639715715428936
m09 ..25..1..85..9..4.916..2.....93.4.5..3.......5..219...3.....4..2.183............7 3 472583169853196742916472583729364851134758926568219374397625418241837695685941237;472583196853196742916472583729364851134758629568219374397625418241837965685941237;472583196853196742916742583129374658734658219568219374387965421241837965695421837
m10 342.57..............123.....5.9.683..3471....2.....1..7....1.....63.891.........3 2 342857691578169342691234578157926834834715269269483157783591426426378915915642783;342857691598164372671239548157926834834715269269483157783591426426378915915642783
m11 .7......8.15...........87436...5.4...48.9.........79369.7.2.814............7..2.. 3 374269158815473692269518743693152487748396521152847936937625814426981375581734269;374962158815473692269518743693251487748396521152847936937625814426189375581734269;374962158815473692269518743693251487748396521152847936937625814526184379481739265
m12 .1....79.7...16523.....8.......5..72...3......728....12.7...1..13...7.64....3.... 4 416523798798416523523798416349651872851372649672849351287964135135287964964135287;416523798798416523523798416364951872851372649972864351287649135135287964649135287;416523798798416523523798416849651372651372849372849651287964135135287964964135287;614523798798416523523798416346951872851372649972864351287649135135287964469135287
x01 ..28......4.....65..9..67.8.78.....6...657..46......21..17......8.94....9..2.5... 0 -
x02 .....2.3..61.....59.8.5.1..72..16..8...52..4....3...526..98..2...2..4...3........ 0 -
x03 .......94.2...93...74.18...59.1....2.....5...4.362..5.2.....1...48.6...9..6....7. 0 -
x04 .....49...36.....8...12.63.64..39.5......6...9..8..1.6.689.3....9..75...5........ 0 -
)corpus";

}  // namespace sudotrans::detail
