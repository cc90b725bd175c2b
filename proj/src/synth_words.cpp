#include "newsflow/synth.hpp"

namespace newsflow {

// Fixed vocabulary for the synthetic token model. 5000 pronounceable
// pseudo-words; regenerating this list would invalidate every seeded corpus.
namespace {
constexpr const char* kWords[] = {
    "aaba", "aagn", "aajaqnar", "aajeler", "aajliobyd", "aakjicyoh", "aapyt", "aavioj",
    "aaxiifyja", "aaxycoki", "aazcivoa", "abaxel", "abei", "aberk", "abevuxe", "abij",
    "abijer", "abinbe", "abolitali", "aboneso", "abraw", "abugy", "abuh", "abupew",
    "abuza", "abyhapi", "abyof", "acaezqaly", "acarumze", "acaxove", "acazik", "acazony",
    "acehodeaq", "acejot", "acene", "aciqehq", "acoguo", "acomo", "acpiopyp", "acqdoqivp",
    "acrnfaqqi", "acuqiwfyd", "acybo", "acyhyana", "acyoqyp", "acypy", "acyrzerp", "acyudaing",
    "adaluti", "adbaxutut", "adebi", "adeferwym", "adegepw", "adeivuqy", "adexiyaoi", "adfawtaty",
    "adfmogu", "adigah", "adihe", "adiyugudu", "adoododu", "aducapo", "aduhyi", "adybapo",
    "adycjgone", "adycux", "adyigop", "adywcm", "adyzxozo", "aeaj", "aeaq", "aecas",
    "aeefpof", "aegavak", "aekasafk", "aeloc", "aeniy", "aeseemib", "aewuhixo", "aezyciodi",
    "afahdiega", "afatem", "afavotinv", "afekas", "afetawase", "afinepe", "afofeci", "afogy",
    "afor", "afoz", "afumo", "afuxtifys", "afuziwo", "agcaxe", "agea", "ageb",
    "agec", "agefuqy", "agehid", "agen", "agesocyjo", "aggoxabp", "agibyfikk", "agierhu",
    "agohapu", "agojas", "agoqigo", "ague", "agulicyz", "aguse", "agusyduci", "agyer",
    "ahazo", "ahezud", "ahgazy", "ahijemx", "ahirb", "ahqc", "ahtsahugy", "ahucii",
    "ahuvun", "ahvi", "ahyd", "ahyz", "aieegeqi", "aike", "ailyfeu", "ainyriy",
    "airibv", "ajad", "ajafev", "ajairk", "ajamikitu", "ajamrn", "ajap", "ajataigt",
    "ajeasuzot", "ajedit", "ajeh", "ajekeby", "ajepalaa", "ajih", "ajogice", "ajwugydup",
    "ajyuhemen", "akarur", "akazyk", "akeeky", "akgi", "akgirav", "akiqy", "akiz",
    "akopowawu", "akuadysre", "akullywbo", "akyhykoen", "akys", "akysamili", "akyvujan", "alaqi",
    "alav", "alelf", "alivyco", "aliwinyl", "alkdyty", "alonuzyce", "alov", "alqij",
    "alrivyjom", "alukl", "alyjizoi", "amamuha", "amas", "amazogels", "amehoigaa", "ameona",
    "ameufe", "amierik", "amiiph", "amiordi", "amitozydy", "amolea", "amufavvx", "amugec",
    "amwi", "anamo", "anes", "anetqyup", "anijarni", "anocad", "anosavyge", "anusdeqoa",
    "anuvdi", "anuvufhe", "anyhew", "anymi", "aoatahak", "aoby", "aocupi", "aogoqftyf",
    "aolixov", "aonyg", "aoozatyce", "aopyda", "aoquydym", "aorygjygu", "aovuo", "aozilyxyx",
    "apan", "aparep", "apawuhid", "apaxjis", "apdfopli", "apegosit", "apewyw", "aphyarl",
    "apiep", "apihuqicu", "apinuxoxe", "aplla", "apnwaxfie", "apodbuj", "apouuto", "apowady",
    "apowi", "apoxemuqu", "apoy", "apyfacni", "apyhubeki", "apym", "apyypod", "aqacawicy",
    "aqat", "aqeedevh", "aqez", "aqgyw", "aqhb", "aqilis", "aqizizegu", "aqot",
    "aqsehuiw", "aqubiv", "aquga", "aqukykom", "aqybuhykp", "aqygivvyn", "aqylo", "aqylosuz",
    "aqypuyb", "aracith", "arafileg", "arau", "ared", "areoafac", "arewakel", "arfie",
    "ariv", "arofemhu", "arofowdug", "arotydihe", "arsi", "aruho", "arumu", "arwovfe",
    "aryai", "asaquvoi", "asduj", "asily", "asiqeha", "asouddohu", "asozyfgoz", "asvo",
    "asyj", "asyrojis", "asytu", "aszuawtu", "ataoit", "atdojcyqi", "atduvyn", "ategu",
    "ateiki", "atepeveqy", "atevufuzi", "aticizuo", "atidnoxe", "atimojm", "atiuunyn", "atjonu",
    "atojytoh", "atomelu", "atoxo", "attyjim", "atua", "atugoe", "atunopu", "atuutyg",
    "atynun", "atyw", "atyzomuno", "auciov", "auexihseq", "aufes", "auhim", "auhozi",
    "aulotet", "ause", "auueg", "auwuxyg", "avabydear", "avad", "avam", "avau",
    "avausymiq", "avazep", "avet", "aveteg", "aveumibez", "avexu", "avipycapu", "avuieibxq",
    "avutoqak", "avygee", "avyisivaf", "avynolt", "avysi", "awaayuzo", "awagh", "awalhy",
    "awane", "awaxvdoju", "awebey", "aweqik", "awhyh", "awikexl", "awivbay", "awobum",
    "awondu", "awrowa", "awuk", "awuogo", "awuyycyv", "awycz", "awyd", "awydoo",
    "awykudyx", "awylaf", "axabr", "axagozu", "axaqou", "axfsgyxo", "axijo", "axinivyr",
    "axiywot", "axona", "axoo", "axotulij", "axowobamf", "axozusyww", "axtvyr", "axuciew",
    "axukozyx", "axybyrakt", "axygejany", "axyl", "axyle", "axytke", "aydyk", "ayhi",
    "ayhm", "aypuduy", "azabep", "azaksu", "azboyej", "azdewaqe", "azef", "azekite",
    "azigilu", "azjewolek", "azkotyxy", "azojakiov", "azooguqi", "azsihuw", "aztawuv", "azujiod",
    "azusica", "azuwicir", "azwawyv", "azyluk", "azyquhar", "azzedoei", "babojeow", "back",
    "badaj", "baezy", "bahyk", "baic", "baio", "bajate", "bajlivy", "bajoopzne",
    "bajydiqr", "baku", "baluryco", "balysog", "bamo", "baso", "bateushuk", "baurigahw",
    "bavunefi", "bayvgyl", "bccuuzah", "bcogias", "bcotulepy", "bcuoq", "beccu", "bedi",
    "beeko", "befuk", "begrigo", "beiqod", "beiqyzewy", "beirira", "beki", "bemuveh",
    "benazymuq", "betxj", "beufekpo", "beujqafoc", "beuwotjib", "bevapyno", "bewe", "bfymgy",
    "bibelfy", "bibiica", "bidii", "bido", "bidovowa", "bigyouz", "biizob", "bijibe",
    "bikok", "binuv", "bipbbt", "biqirocaa", "birahru", "biria", "bitijasut", "bjafuuuf",
    "bjpanypeg", "bker", "blooso", "bmidocb", "bmjyupef", "bmuv", "bnese", "bobameowi",
    "bobeveq", "bocup", "bodapehop", "bodeaqzet", "bodifym", "bodiqavod", "bodmyru", "bofatu",
    "bofen", "bogs", "boidyly", "bojaize", "bojom", "boryu", "bovu", "bowexi",
    "bowuxeha", "boxepepce", "bozyw", "bpahm", "bpujakyaj", "bpuolbupo", "bseji", "buaee",
    "buemufiv", "bugahukyq", "bukazeh", "bukobioje", "bunucaray", "bupebug", "bupujiube", "bupyp",
    "buva", "buwikc", "buxakr", "buyagar", "buyfaate", "buyju", "buzyehi", "bvexpe",
    "bviqgoqo", "bwlicibeg", "bxavourej", "bxyjat", "bybiba", "bydakyab", "byha", "byivyxu",
    "bypu", "byqanaomk", "byseaqbij", "byso", "byvu", "byweg", "bywyh", "byxyfi",
    "cabila", "cabyeme", "cage", "cagibu", "cahuty", "cajozimy", "cakt", "caluh",
    "caniluod", "caqulo", "cassqoz", "catelily", "caxetriz", "caxopr", "cayje", "cayxuc",
    "cazelwk", "ccyfisyv", "cdmavohi", "ceciby", "cecynoj", "cegy", "cejgagam", "cejiruj",
    "cejo", "cejy", "cekedu", "cekigg", "cekozou", "celota", "cemo", "cemomim",
    "cemumiok", "cenajurow", "cenebykl", "ceqyu", "ceste", "ceuvahow", "cfirueh", "chadtoza",
    "chiqysyj", "cievihiti", "cigeykoq", "cihavur", "cihe", "cikuep", "cikymvel", "cimalize",
    "cincif", "cinyphe", "cipymez", "ciryvaq", "cisawa", "civoy", "cixebzof", "cizoen",
    "cjudociv", "ckicarum", "cmisa", "cnekeeeno", "coam", "cobisoz", "coco", "coegyamaq",
    "coib", "coje", "cojnee", "cojo", "coozoimoq", "coqhulup", "covohas", "coximubug",
    "cozy", "cqebuylyt", "cqoaz", "cqougliwa", "crile", "csacobes", "csem", "csqe",
    "csur", "ctose", "ctxxajan", "ctyfiz", "cubky", "cudece", "cudforig", "cudid",
    "cujyy", "cukoopy", "culy", "cusoy", "cuvavi", "cuveclud", "cuxefen", "cuxseziw",
    "cuzabin", "cvecypuvu", "cvuody", "cycuqrok", "cyehe", "cyfale", "cyfaw", "cyfo",
    "cyfu", "cyfyjy", "cyluwyju", "cyphjuqa", "cypo", "cyresuvu", "cyrol", "cyser",
    "cyvi", "cywecev", "cyzete", "czaet", "daada", "dabasebe", "dacefoy", "daden",
    "daeula", "dagyohu", "dahosb", "dainemia", "dajxivoh", "dajyjw", "dajyuxinu", "dalur",
    "dapuho", "darorudi", "dauh", "dauri", "daxujux", "dayu", "dayz", "dbceqie",
    "dbexut", "dbxeculuk", "dcsyoh", "ddadeje", "ddijul", "deboqups", "degko", "deib",
    "deji", "dekiysyzi", "demyd", "depifusgu", "depowam", "desnucos", "dexorura", "deyl",
    "dfydaly", "dhubogily", "diahezisi", "dibecoqu", "dibux", "dideay", "digxozeto", "dihemoxu",
    "dihode", "dijakaxu", "dikosiqeu", "dimedo", "diojeada", "dipuda", "diqpuw", "disi",
    "disvojun", "dito", "diufp", "diukovmic", "diunugu", "diva", "diwexyma", "dixary",
    "dixoce", "diyniculw", "diytfy", "dizahdd", "dizo", "djafik", "dltuxo", "dmyucet",
    "dnein", "docm", "dogit", "dogo", "dogoxgaqy", "dogysyucu", "dohezo", "dohidiydi",
    "doih", "doirq", "dolaew", "dolok", "domnebas", "donitipa", "doqepj", "dose",
    "dosi", "dosucabuh", "dowovih", "doxamjo", "doxysaqmq", "doykizem", "dpoy", "dqandyuei",
    "dqisereks", "drimeyw", "drol", "dsos", "dtulooxjj", "duajeee", "duaw", "dubev",
    "dudaqmu", "dufomyj", "duixive", "dujo", "duliuzyem", "dume", "dumubaz", "dunyq",
    "dupatizy", "duqat", "duqugarey", "durabof", "durulakur", "dutcfefet", "duvap", "duvosyww",
    "duxoel", "duzi", "dwivuz", "dwizub", "dxiwyguvu", "dyaquqiza", "dycilev", "dydin",
    "dyedusi", "dyes", "dyflypa", "dyhanc", "dyik", "dynjado", "dypaamaro", "dyqo",
    "dyraexva", "dyrezip", "dysetbq", "dysevsoeo", "dysewk", "dywavo", "dywix", "dyxigi",
    "dyytajon", "dyzemopna", "dzori", "eacak", "eadi", "eaitoz", "eaju", "eanyicypu",
    "eapryaq", "earohko", "easy", "eatecxiuh", "eatxyse", "eautyfe", "eaximypbg", "eaygpgel",
    "ebag", "ebamaifeb", "ebaqawu", "ebaru", "ebewane", "ebfcexj", "ebiserwyq", "ebisizoha",
    "ebmogova", "ebore", "ebqlamu", "ebuvemevy", "ebwowupyr", "ebys", "ecabype", "ecekyzoje",
    "ecgioka", "ecidysi", "ecuqugv", "ecuv", "ecwyq", "ecxt", "ecxuw", "ecycu",
    "ecyg", "ecyk", "ecyru", "ecyvyaa", "ecyzyqy", "edamujy", "edasecawi", "edawluhyd",
    "edcen", "edesru", "edezugel", "edicyj", "edilu", "edkagelwu", "edolrok", "edri",
    "edsedoh", "edtyho", "educre", "edufon", "eduuuladi", "edyga", "edyje", "edymuk",
    "eeas", "eegolepy", "eejini", "eeruiasmi", "eese", "eexuzieof", "eexyweif", "efasipe",
    "efec", "efef", "efevul", "efewit", "efexuzuwo", "effeqisoo", "efimagf", "efmefeu",
    "efog", "efop", "efuherila", "efydu", "efymedybo", "egao", "egaqacja", "egaso",
    "egawupuqa", "egedux", "egedya", "egeguoq", "egekfulu", "egeoduz", "egewxupi", "egey",
    "egme", "egoefad", "egrawa", "egsvuh", "eguel", "egulye", "egurivep", "egute",
    "egwibuzor", "egyov", "egyyvez", "ehacuqui", "ehas", "ehaty", "ehbwuce", "ehecueteq",
    "eheixuceq", "ehejat", "eheloho", "ehemoymyg", "ehiojqyti", "ehioluibt", "ehjif", "ehovnu",
    "ehujiqac", "ehulcdomu", "ehuwyri", "ehwece", "ehykazve", "ehypi", "ehyrib", "ehys",
    "eibo", "eida", "eifaxurs", "eiguho", "eiiravy", "eiiroyz", "eijorq", "eilasot",
    "eisuigoq", "eiwope", "eiyua", "eizy", "ejas", "ejebuca", "ejebyvy", "ejex",
    "ejgosqyku", "ejiesufu", "ejiny", "ejma", "ejonw", "ejoym", "ejszynop", "ejuky",
    "ejuzy", "ejyajopej", "ejydavi", "ejylapyh", "ejynu", "ekam", "ekawyc", "ekbikiq",
    "ekco", "ekcyetygy", "ekibni", "ekik", "ekjug", "eksi", "eksizo", "ekso",
    "ekujkivo", "ekup", "ekupooety", "ekxae", "ekyb", "ekyhiv", "ekykyos", "ekytoaki",
    "eldocpo", "elebuksv", "elgytuq", "eljopil", "elodaam", "elomuvuuh", "eluzysube", "elyhuxovi",
    "emamufyse", "emaumobyk", "emayz", "emecalaax", "emekodo", "emenydb", "eminy", "emmij",
    "emohykaxa", "emojpeag", "emojvlz", "emoruysou", "emux", "emyevoz", "emygte", "emys",
    "emyuze", "emyzeo", "enaewukyt", "enedin", "eniaje", "enihaqupb", "enomeoxi", "enoyqu",
    "enper", "enukas", "envobam", "enxaihyv", "enyhiv", "eobawyl", "eods", "eogehoo",
    "eogip", "eogoofvil", "eojopyh", "eopemym", "eoqaso", "eowoqu", "eowy", "epafudad",
    "epapy", "epau", "epeysazy", "epfk", "epigs", "epihipi", "epikya", "epinyzeke",
    "epipyi", "epiyn", "epjuluj", "epjuojo", "epono", "epuof", "epuxyq", "epxaka",
    "epyb", "epyolyla", "epyqo", "epytebo", "eqajula", "eqbitva", "eqby", "eqeheoza",
    "eqiholys", "eqix", "eqiy", "eqogyo", "eqosuis", "eqoynaxun", "equqxed", "erearuke",
    "eribiec", "ermahyuy", "erodwyb", "eroz", "erwdec", "esapuz", "esavin", "esawvex",
    "eselu", "eseqnyi", "esevus", "esifys", "esiumuzuk", "eslyx", "esov", "esoxaj",
    "espitjo", "esugsa", "esujaypy", "esutoz", "esyseduz", "etaju", "etalj", "etbl",
    "eteabaju", "etevme", "etexosuo", "etiba", "etiw", "etiyxore", "etiz", "etoben",
    "etovaspo", "etryz", "etteujygb", "etuar", "etuwox", "etycyz", "etyqef", "etyxebov",
    "eucetib", "euduqatca", "eufzozaf", "euhay", "eumegjil", "eumxy", "eusia", "euunelo",
    "euvu", "euwjitova", "euzudopy", "evbik", "eveqy", "eviba", "evipinayz", "evoryd",
    "evuewear", "evukdas", "evurd", "evyhok", "ewarepvu", "ewatyft", "eweduh", "ewegyquh",
    "ewej", "ewos", "ewowyw", "ewyf", "ewypuvudc", "exabyz", "exatu", "exawofu",
    "execcowit", "exefuli", "exehir", "exenen", "exeoedy", "exeronryc", "exezue", "exityp",
    "exiworeq", "exiy", "exlit", "exon", "exusi", "exyki", "exyqezwx", "eyabes",
    "eydeb", "eyfizuk", "eykacyvah", "eynizyhag", "eynuj", "eyqogfu", "eyqoroe", "eyxuvimod",
    "eyyxsim", "eyzaafe", "eyzjos", "ezacipeqa", "ezagyise", "ezate", "ezefa", "ezejakoyp",
    "ezewuaeca", "ezihxus", "ezisunyl", "ezjee", "eznu", "ezocedybu", "ezoqe", "ezos",
    "ezuf", "ezyga", "ezygimife", "ezzeju", "faciny", "fadi", "fadyxun", "fafiw",
    "fagetuo", "fageycam", "fahy", "fapba", "fapm", "fapta", "fatoef", "fatycax",
    "fautijunx", "faweh", "faxyvo", "faymofi", "fcof", "fecuguquh", "fedfobiak", "fedodun",
    "fegi", "fejzv", "feriqi", "feue", "fezexby", "fezw", "ffix", "fgeqohi",
    "ficijenl", "figos", "fikefupit", "fikoba", "fisakycan", "fity", "fivuvoj", "fiyivovo",
    "fiykij", "fizyhvoso", "fkej", "fmeida", "fnaokq", "foatinise", "foayda", "fobufa",
    "fojiziz", "fojoni", "fola", "foleko", "fonosa", "fonqaxur", "fopebo", "foradyvi",
    "fougaj", "fovwosyl", "fowid", "fowiv", "foyduqid", "fozpnode", "fozuzi", "fozyoxdyi",
    "fpys", "ftefeko", "fuamev", "fubozil", "fucu", "fudymusex", "fufdmjuwc", "fugany",
    "fugejinf", "fuhe", "fuhnyquh", "fujediwad", "funi", "funulaj", "fuqub", "fuqyxu",
    "fuqyzba", "fure", "futarmm", "futtuo", "fuvyd", "fuwetok", "fuxhe", "fwaxeuvob",
    "fxanur", "fxdybe", "fyck", "fydy", "fyefag", "fyeqi", "fygygeg", "fyhiky",
    "fyma", "fymezhpu", "fymsn", "fynwuj", "fyose", "fyqkut", "fyrytex", "fywuwij",
    "fyzace", "fyzygea", "fyzynxl", "gabola", "gacylo", "gadua", "gadyhuax", "gagcy",
    "gageqi", "gaguf", "gahy", "gajyec", "gake", "gako", "gala", "galisih",
    "galovetp", "galyccy", "gamydidy", "ganolec", "gaoke", "gaqupoqe", "gaugyil", "gawigu",
    "gaxazuexy", "gaxeesuz", "gazi", "gazopobw", "gcogyezog", "gcud", "gdylav", "gdyxerafo",
    "gebo", "gedomocy", "gedyw", "gehjonoys", "gelupytij", "gelyxoqhi", "gemu", "gepasyme",
    "geqjoq", "geqyji", "gesitfy", "getuzyl", "geuceyk", "gewouxipy", "gexuzaat", "geyaco",
    "geyvewodu", "gezyht", "gfaby", "ghiiare", "ghofib", "gibeqify", "gicu", "giekb",
    "gieqyh", "gifafub", "gigoceza", "gihqe", "gijycaft", "gilasoja", "gilochu", "giluq",
    "gilzebuai", "giqyir", "gitikn", "gitog", "givywin", "gjofos", "gkap", "gken",
    "gletuw", "gmajijoc", "gnagifoip", "gneo", "gnuhiho", "goaj", "godepywy", "goewoke",
    "gofewy", "gogy", "gojuricil", "gokolkiq", "golfaihvy", "goporec", "gopylucuz", "gosit",
    "gostik", "gotonyemo", "govoq", "gowiryxe", "gowuiwojw", "goyw", "gqej", "gqiko",
    "gqiy", "grhut", "grycagw", "gsieeauor", "gsipoxj", "gsuvybjer", "gtafookot", "gudatv",
    "gugupimoj", "guiazd", "guijobe", "guimobyso", "guje", "gula", "gupaqyxo", "gupy",
    "guqz", "gutuw", "guyjofa", "guzi", "gvad", "gxitoha", "gxozry", "gybiku",
    "gybyby", "gyci", "gycu", "gyksedu", "gymedema", "gymuv", "gymyg", "gyogum",
    "gypa", "gypi", "gyravosyk", "gysum", "gytarg", "gytho", "gyxasa", "gyzelioqx",
    "habobu", "hacikak", "hadobipy", "hagoag", "hajoi", "hajqabyr", "hake", "halevif",
    "haneco", "hanqehyp", "hape", "hareha", "hariibe", "hataxane", "haty", "hatyvexak",
    "hawup", "hawyhfer", "hciw", "hdifycein", "heaxifire", "hecahyj", "hecyefena", "hedah",
    "hegi", "hehame", "hehuug", "hejkge", "heju", "hele", "heleleqot", "hemrau",
    "hepf", "hevudyv", "hfami", "hguvtyv", "hhejae", "hiaukywuk", "hicagipv", "hicuhop",
    "hidazy", "higegu", "higibo", "higuhikic", "hiilom", "hika", "hileweluz", "himjerym",
    "hinipohe", "hioj", "hipes", "hiqaxad", "hiry", "hirzouit", "hisenu", "hitulyx",
    "hivelu", "hiwm", "hixs", "hiyqe", "hkigub", "hkolulbo", "hnaydvb", "hobwdiufa",
    "hocg", "hodiu", "hofekn", "hofexu", "hogol", "hohohofxa", "hohurid", "hojri",
    "hoka", "hokojyqar", "homevow", "homur", "honso", "hopypa", "hosizo", "hoteyh",
    "hoxuno", "hozype", "hpoana", "hqojofig", "hrobas", "hubuh", "hudelpl", "hudi",
    "hueslu", "hufoo", "hufyu", "huganed", "hugylesi", "huhixuh", "huki", "humaosewe",
    "humpgei", "hunafezic", "huqaci", "huqokiian", "huqopyjxi", "huqosozu", "husu", "hutu",
    "huuxd", "huvuhu", "huvyiiw", "huwuipoke", "huxee", "huyriq", "huytoxe", "huzxodtuc",
    "hwoavon", "hwuj", "hxigmtyha", "hxywghv", "hydomansy", "hyezyxjoi", "hyfat", "hyfituz",
    "hyivuholz", "hynalegi", "hynece", "hynypyne", "hypti", "hyqivij", "hyqyyi", "hyryd",
    "hyufewaz", "hyvitles", "hyvopke", "hyvuouyny", "hywi", "hyypoli", "hzeg", "hzmirvi",
    "iaber", "iady", "iaero", "iahiaw", "iajkydyxu", "iaknxawoe", "iaow", "iaqiderza",
    "iatavez", "iaxeqyh", "iazisil", "iazu", "ibab", "ibaiq", "ibegoos", "ibexuhieo",
    "ibiixozyi", "ibiq", "ibnecaba", "iboywt", "ibqet", "ibubo", "ibujyhi", "ibuku",
    "ibur", "ibux", "ibvfy", "ibywuygt", "ibyxan", "icahovav", "icaw", "icel",
    "ichoyb", "iciwylunu", "icua", "icuf", "icuzaj", "icyfiby", "icyl", "icylt",
    "icymyro", "icyruci", "icytez", "icyweq", "idacno", "idafava", "idaru", "idavibyqe",
    "idebuero", "idlleja", "idlozow", "idogy", "idok", "idozal", "idrx", "idtaukab",
    "iduc", "iduumzesy", "idyeeh", "idyj", "idyve", "idyzane", "ieawuk", "ieeaga",
    "ieeke", "ieen", "iejovgoq", "iekav", "ieksuhoko", "iekuqxobe", "ieouuz", "iepykijyu",
    "ieqefawim", "ieqig", "ieryw", "iesatizi", "iesoby", "iesw", "ietutatyh", "ifabapji",
    "ifajivk", "ifav", "ifaw", "ifeg", "ifejo", "ifepixaf", "ifeuv", "ifev",
    "ifewav", "ifinasul", "ifino", "ifojiyriz", "ifuoevo", "igadyg", "igahu", "igajnyjav",
    "igavix", "igduhs", "igeoiquqi", "igfi", "ighnywari", "igifaxy", "iginuty", "iginyiq",
    "igucas", "igue", "igujso", "igungy", "iguv", "igxedfum", "igydoyd", "igygiser",
    "igyju", "igypihem", "igysenaiw", "igyufyg", "ihagmuqe", "ihah", "ihakilayt", "ihaxo",
    "ihefili", "ihefulsox", "ihen", "ihexuse", "iheyq", "iheytubmv", "ihmyvowy", "ihuozaw",
    "ihutp", "ihyjedib", "ihyjodab", "ihymiipey", "iibed", "iido", "iimulo", "iinetaku",
    "iiokcuut", "iiqa", "iitd", "iititae", "iizije", "iizyhuw", "ijacedite", "ijapyhju",
    "ijaxifyd", "ijay", "ijejakl", "ijekihixu", "ijetfeq", "ijidufor", "ijik", "ijim",
    "ijivow", "ijizoehuw", "ijmu", "ijoh", "ijoveqe", "ijra", "ijufeu", "ijufutim",
    "ijumeqibi", "ijurygug", "ijuu", "ijuufe", "ijvav", "ijwj", "ijxa", "ijypofesz",
    "ijyszieci", "ikaxob", "ikee", "ikeqpydo", "ikidlnuby", "ikige", "ikob", "ikoed",
    "iksu", "ikur", "ikwyg", "ilaf", "ilaj", "ilapyquk", "ilea", "ileliy",
    "ilemecu", "ileu", "ilewod", "ilfara", "iliozurun", "ilirwx", "iliski", "ility",
    "ilkeriwd", "illof", "ilocbose", "ilosaxyg", "ilosibi", "ilredgu", "iludas", "iludytuco",
    "ilunovqy", "ilutyca", "iluv", "ilyfiu", "imasiom", "imatcuco", "imava", "imawpuwab",
    "imegile", "imekiq", "imibax", "imicyp", "imiker", "imil", "imin", "imipow",
    "imnqibu", "imobe", "imowysic", "imufyd", "imugatb", "imunywyyd", "imvh", "imyvu",
    "imyxanpyy", "inasyvugi", "inau", "inetoeve", "inetov", "inetydhyf", "inetywi", "ineve",
    "inew", "inic", "inihope", "iniolax", "inivyde", "innucef", "inpefix", "inud",
    "inulenof", "inunufus", "inutuxyl", "inwpyl", "inyzoqax", "inzqe", "iocimaja", "iojevav",
    "iokawonik", "iomejeto", "iomiqae", "iomonafoe", "iomub", "ioqhoguca", "ioredija", "iouqa",
    "ipaje", "ipatucu", "ipazabil", "ipazuno", "ipedenu", "ipefyf", "iphemom", "ipib",
    "ipiij", "ipinig", "ipivevi", "ipkeis", "ipocodad", "ipuit", "ipukep", "ipureg",
    "ipxujfona", "ipyqe", "ipyrav", "ipyxu", "iqaqiv", "iqari", "iqavucuj", "iqbnqes",
    "iqeufdyj", "iqkyvysoj", "iqoge", "iqojvocy", "iqokn", "iqoomyby", "iqoy", "iqulaf",
    "iqum", "iqutiqexa", "iquzu", "iqwira", "iqyfo", "iqyjy", "iqylaohs", "iracof",
    "iranuok", "irape", "irasygon", "irdolaqo", "ireluwo", "irevu", "irez", "irijokuwy",
    "irinoqi", "irirym", "iriukiei", "iriuxi", "irjicat", "irodam", "irodymoqe", "irofyv",
    "irpuhup", "irqa", "irsze", "iruh", "iruhmet", "irumusyoc", "irworlip", "irydyx",
    "iryvu", "isaajezo", "isawyr", "isayty", "isceimi", "isefei", "isem", "isemawfok",
    "isex", "isityv", "isivrafo", "isiw", "isojyk", "isufeced", "isyarigi", "isydunuf",
    "isye", "isyqu", "isyvezu", "isyw", "isyxiygem", "itaj", "itajaiz", "itaq",
    "itaron", "itaxxome", "itefiz", "itetej", "iteukyhy", "itig", "itijut", "itioquu",
    "itiw", "itohi", "itoilywum", "ituajrymc", "itumu", "itwesuk", "itysitit", "ityvuyh",
    "itze", "itzqoqi", "iucuxe", "iudugu", "iuesolzf", "iufionyoi", "iuqer", "iuveta",
    "iuyrhuxuq", "iuzne", "ivacxoby", "ivaevuvuj", "ivaki", "ivar", "ivba", "iveryfok",
    "ivfli", "ivid", "iviejbesa", "ivna", "ivpyno", "ivryp", "ivusoxa", "ivuysinop",
    "ivybocov", "ivzyo", "iwalyk", "iwaziteqe", "iwduzai", "iweeferyg", "iwefu", "iwenime",
    "iwesnuci", "iwewona", "iwih", "iwinu", "iwipoty", "iwivulybr", "iwkyb", "iwoqja",
    "iwwo", "iwyahebuq", "iwycoodad", "iwyefimuh", "iwytode", "ixaozydy", "ixasy", "ixekocab",
    "ixemyqal", "ixexe", "ixhukuurk", "ixibipuc", "ixigixyzr", "ixizoqib", "ixobu", "ixofypas",
    "ixogiija", "ixosokbay", "ixqygin", "ixuhyu", "ixupyry", "ixur", "ixyby", "ixykequ",
    "ixyoisav", "iybypif", "iycuniy", "iydinaroq", "iydryty", "iyhabi", "iyhjahodi", "iyhy",
    "iypu", "iyqybyobe", "iytix", "iywybygun", "iyxa", "izaw", "izhehvg", "izifovvao",
    "izixzup", "izokale", "izosy", "izovu", "izucaui", "izumuyg", "izuniz", "izurugsy",
    "izutusy", "izuwowen", "izuxobgir", "izyd", "izyjix", "jaco", "jadicubpo", "jafnydogy",
    "jagmi", "jagyr", "jakewudon", "jame", "janaigoc", "jaoqujc", "jaqaapy", "jarojewh",
    "jasqu", "jasvyq", "jauzebabf", "javehqi", "jawivofuc", "jazprmeiq", "jboceyto", "jbycxidok",
    "jeadipym", "jebac", "jebjfayg", "jecyunek", "jeexal", "jeiocai", "jejo", "jekufywon",
    "jelosomy", "jemo", "jena", "jenyz", "jepehukua", "jeqyookyn", "jeri", "jesadu",
    "jetibeiw", "jeulos", "jevk", "jewophye", "jewuhu", "jexaguzyz", "jicodiso", "jicogif",
    "jicozef", "jidaqexyv", "jidyzarq", "jihepek", "jihxebesu", "jiisb", "jijoce", "jili",
    "jilkyduqu", "jimijyw", "jiriwavut", "jiruusuom", "jisofiwa", "jisra", "jitimjyj", "jius",
    "jivu", "jiwiqyve", "jixocyri", "jiys", "jkuxu", "jlturywis", "jlyf", "jmaede",
    "jmid", "jmwm", "joabuuf", "jocejaxis", "jocudoz", "jodip", "jodulej", "jofys",
    "jogutip", "johy", "jojofy", "jokusulo", "jolau", "jonadgo", "jopcb", "joroosuk",
    "josym", "joun", "jovo", "jozh", "jrazidepy", "jrxus", "jszudod", "jtos",
    "juaerzsa", "juaf", "juavotdev", "juedyqa", "jugyn", "jukaqiiwu", "jukiyykeq", "jukyfyqy",
    "junahyvo", "juotewoto", "juov", "jupi", "jupo", "jutez", "jutiuemyu", "jutog",
    "juvar", "juwabig", "juwitifa", "juwytypu", "jvazaq", "jwor", "jybdixo", "jybv",
    "jycuka", "jycyulueb", "jyfa", "jyfap", "jyhdh", "jyklid", "jylavab", "jypruxafi",
    "jyqu", "jysiga", "jyujet", "jywej", "jywoce", "jzuvazk", "jzymvazu", "kabo",
    "kacoru", "kadi", "kaekymyt", "kafonunef", "kagies", "kakigocy", "kalu", "kanoho",
    "kansisuky", "kapo", "kapoj", "kaqu", "kaseweite", "kauh", "kavrga", "kaxalay",
    "kaxiapyq", "kaxqe", "kazg", "kazijeh", "kazykoy", "kbige", "kbix", "kdalo",
    "keagd", "kefewitee", "kegib", "kehoypy", "kehuc", "keijaaoku", "kejcyhi", "kejpiaim",
    "kejybuzsr", "kelesi", "keosutaci", "keravudis", "keso", "ketu", "kevifeg", "kezuxywex",
    "kfuc", "kgev", "kibeziek", "kibodof", "kibuhe", "kicj", "kidi", "kigca",
    "kiguyy", "kihyqy", "kijid", "kikujicue", "kilet", "kili", "kimabevkp", "kimakuudo",
    "kiqqixud", "kiqt", "kisalifet", "kivawu", "kivu", "kivujio", "kixyeyryd", "kiyqzr",
    "kjku", "kjpe", "klaq", "knipenoki", "koauboxet", "kobiz", "kofilax", "kofyrivec",
    "koijitac", "koku", "komuhaq", "kooresy", "koqobo", "kosu", "kosutywxa", "kovny",
    "kowe", "koweb", "koweloaqa", "kowui", "koxy", "kpasori", "kqojuvojy", "kqow",
    "ksaxu", "kuab", "kuafe", "kuawgo", "kubyqyz", "kucyz", "kufa", "kuguq",
    "kuimibasm", "kuta", "kutokq", "kuvud", "kuwahijys", "kuwsmo", "kuzygy", "kvok",
    "kyaagiqa", "kybezoz", "kycyri", "kyhee", "kyjquo", "kyketonyq", "kykl", "kykylulis",
    "kymo", "kymuuin", "kyowyagt", "kypij", "kyso", "kyus", "kyva", "kyvl",
    "kyweug", "kywyojuyh", "kzaq", "kzavo", "kzuv", "laaz", "lacorz", "lafacu",
    "lahueyr", "laiwcyqy", "lalehat", "lanorjyl", "lapuzicfo", "larbecoer", "latycua", "lavel",
    "lavujoawi", "laxo", "laygi", "laysubufy", "lciw", "lebawbevz", "lebons", "leeix",
    "lekehi", "lekl", "lerryabom", "lerugqma", "lesaoco", "lesyw", "letivr", "leudok",
    "leutafoj", "levure", "lezybevuv", "lfudeeg", "lgaianah", "lgeepiv", "lhin", "lhuer",
    "liar", "lidqaxag", "liexebe", "life", "lihop", "lihu", "liko", "likof",
    "lilir", "lilyhowod", "linoji", "lioxuz", "liqwysmhu", "lirazoxer", "litaby", "litdjexis",
    "liwawiejj", "liwgexas", "liwodi", "liwynacda", "lizut", "lleuw", "loahywjie", "loaxako",
    "lobevav", "lobiydu", "loboedyy", "lodamefyz", "loepkevs", "loepok", "lofguseze", "lofuqyip",
    "logigi", "lohu", "loijevuw", "loizugque", "lojario", "lojyvo", "lokpwiala", "lolhbl",
    "lolok", "lonujicy", "loqimudy", "lorydo", "loryhfpo", "lotijezyy", "loxewivem", "loxocaw",
    "loxohla", "loxucoby", "loxybkoia", "lozeqy", "lpayjytil", "lqiz", "lqug", "lsawjig",
    "lsecju", "lsokej", "ltecet", "ltusa", "lubao", "lubehysol", "lubomura", "lugexej",
    "lujowucec", "lukywat", "lulfu", "lumu", "lumuainy", "lumxhobup", "lunetap", "lunhbaby",
    "lupwram", "lupyn", "luqufi", "luritihav", "lusahy", "luubaw", "luueq", "luvec",
    "luvetu", "luxy", "lwylzx", "lwyoqoemo", "lycu", "lycyqyzi", "lydtak", "lygyoti",
    "lyhu", "lyirivih", "lykc", "lypov", "lyqozhek", "lyrexal", "lysage", "lytipi",
    "lyum", "lywihgbi", "lyxaaab", "lyzysetu", "lzaw", "lzyynaweg", "mabyftxeb", "macvbude",
    "makgas", "mali", "manyfo", "maoniwo", "maqyxxe", "maqyypegu", "matuxudyd", "mauhuziqi",
    "mawoh", "maybo", "maystb", "meaxtiro", "medtehe", "medytys", "mefvycxi", "mehipkze",
    "mehro", "mejakeqa", "mekefijx", "memt", "meni", "menibail", "menif", "menujipz",
    "merw", "mese", "metajaz", "metio", "mevyqyti", "mewyximu", "mexeq", "mexulyfuf",
    "mezasaupe", "mfuluz", "mialymi", "miazepug", "micoqih", "micypue", "middomov", "mihifyre",
    "miiuptz", "minaz", "mineg", "minmeewu", "mioj", "miqrizusa", "miqugifoz", "mira",
    "mirfiqyi", "mitocata", "mivi", "mivuwijah", "mixinygeq", "mkejefi", "mlsos", "mluvopot",
    "mnazma", "mobe", "mobetozs", "mocal", "moexe", "mojtuzexu", "mokouoj", "mokqovo",
    "mokudeah", "molemu", "momefi", "momydke", "monat", "mone", "mopysam", "morzy",
    "mosgesy", "mosojpbat", "mota", "motouy", "mozosa", "mpygote", "muates", "mubuh",
    "mubum", "mueoma", "mufiibu", "mufuca", "muga", "mugijibg", "muha", "mujybowu",
    "mukixu", "muku", "mulaiu", "mumelyjc", "muutamohn", "muvyn", "muxed", "muzz",
    "mxezaztiz", "mybeoset", "mydemfzyl", "mygiduzme", "mygouw", "mygyboy", "myijew", "mykipydo",
    "mymisosi", "mynusj", "myofwzuvt", "myqypyfo", "mytarvy", "myuvuno", "mywe", "myxovae",
    "myxuwxyxa", "naahi", "naaxogyx", "nacazup", "nacheero", "naciseqyp", "nada", "nadui",
    "naelu", "nafeel", "nagq", "nalilewu", "nalusivud", "napimemid", "naualid", "nbedia",
    "nboty", "ncap", "ncid", "ncysy", "nebitel", "neefyx", "nefop", "negi",
    "negyvel", "nehep", "nejukyraz", "nekpib", "nekypudiz", "nelurovk", "nemibijuw", "nenelohab",
    "neni", "nenijucol", "nenyt", "nepo", "neregymor", "nesauw", "newolirxe", "nexes",
    "nexyj", "neyryjo", "nfuh", "ngdfeybos", "nidugan", "nidukib", "nihyxoq", "nikykugy",
    "nikylaha", "nilhuhhav", "nilifyru", "nilocoduh", "nimeg", "nimo", "nipejabi", "nipoy",
    "nirv", "nitegew", "nituno", "nivil", "nixafeyzu", "nixoretk", "nizanocu", "nizokyt",
    "njgydasu", "njomuq", "noaliquqy", "nobexeomi", "nobugyx", "nodonifu", "nodyevu", "noenpyze",
    "noja", "nojetakyn", "nokogi", "nolikub", "nopov", "noqa", "nosijvje", "notup",
    "nowuq", "noxibumzo", "noygud", "nqap", "nsasfhuf", "nsfiruief", "nsom", "nuas",
    "nubibeida", "nuby", "nudbik", "nuggateko", "nuguhe", "nugun", "nule", "nuletegec",
    "nulob", "nulola", "numucoji", "nupita", "nuqeyr", "nusyritfe", "nusytubn", "nuteeaus",
    "nuvaba", "nuwonoct", "nuwui", "nuyme", "nuzepihac", "nuzoxynk", "nuzunubas", "nwoapovuq",
    "nxaaxumw", "nybyv", "nyfuz", "nygana", "nyha", "nyhenuiha", "nyhoyx", "nyhyp",
    "nylamp", "nymi", "nynuvyfab", "nynysidet", "nyolujy", "nypszun", "nyri", "nyrymaer",
    "nysoj", "nyvuzoj", "nyzu", "oagy", "oajixu", "oajize", "oalu", "oamahyby",
    "oareniuod", "oauyxy", "oavohiaab", "oazaymuc", "obahat", "obahy", "obanabi", "obecezwd",
    "obeg", "obesu", "obimodxo", "obiri", "obiwer", "oblixjhu", "obogmovot", "oboypu",
    "obrmbu", "obugym", "obujeoesu", "obykimez", "obypidy", "obyr", "ocagrycox", "ocaozxizy",
    "ocenufs", "ocgrz", "ocimorus", "ociuv", "ocixort", "ocixuk", "ocizijiju", "ocladyiwy",
    "ocmd", "ocomaig", "ocosajyyt", "octtucy", "ocurej", "ocusyx", "ocyh", "ocymejidu",
    "odar", "odazemoq", "odeexmf", "odepeoq", "odevyvy", "odga", "odicugiry", "odiryeazi",
    "odizytura", "odonoca", "odradylfu", "odrivy", "odug", "oduyxap", "odybu", "odypusucy",
    "oecejgry", "oefiruw", "oeixazeb", "oekbani", "oelaj", "oemify", "oeny", "oepoaxew",
    "oerem", "oerohy", "oewucaq", "ofabuxre", "ofaby", "ofaca", "ofaulynu", "ofavo",
    "ofaz", "ofefiu", "ofenah", "ofeodnero", "ofevera", "ofevury", "ofeycu", "ofom",
    "ofopib", "ofqaniti", "ofqylewtu", "ofuoqeq", "ofuqymm", "ofvih", "ofwy", "ofylbi",
    "ofymalok", "ofyu", "ofyvoi", "ogaz", "ogdivmo", "ogec", "ogegbij", "ogeig",
    "ogenciap", "ogepog", "ogeyw", "ogijud", "ogilyze", "ognod", "ogobaty", "ogokyt",
    "ogqitine", "ogtutada", "ogucapo", "ogufxocyp", "ogylgo", "ogyob", "ohab", "ohadof",
    "ohagesyg", "ohapoc", "ohebowajo", "oheowi", "oheqalap", "oheyaouoj", "ohgale", "ohis",
    "ohizy", "ohomet", "ohoquzer", "ohotyhem", "ohulan", "ohusukomo", "ohutu", "ohuva",
    "ohuwaue", "ohyrebux", "ohzit", "oihoo", "oiluzax", "oilysuik", "oimuj", "oimykym",
    "oinodi", "oiqalamv", "oiqywas", "oiros", "oitm", "oivy", "oiynujyyf", "ojaro",
    "ojde", "ojelyym", "ojeugi", "ojewvu", "ojibe", "ojiko", "ojisom", "ojoa",
    "ojuunxyuh", "ojuxeaqyh", "ojylyly", "ojypufan", "ojyw", "okafyuis", "okawivf", "okcon",
    "okef", "okefe", "okexewosz", "okgexu", "okizede", "okojym", "okoliel", "okoro",
    "okosyqo", "okov", "okozyafi", "oktgaho", "okuko", "okun", "okupun", "olafyk",
    "olepar", "olex", "oligxme", "olimakok", "oliwrid", "olodpezy", "ologuv", "olseh",
    "oluqui", "olybur", "olyf", "olymozog", "omage", "omawy", "omeakaur", "omek",
    "omenega", "omeri", "omig", "omkatx", "omoairec", "omol", "omopdss", "omoteau",
    "omqala", "omteweqo", "omuneb", "omupaiyr", "omuzehu", "omwydox", "omyaqvau", "onafeje",
    "onalerova", "oncidud", "onef", "oneilyso", "onifi", "oniog", "onisu", "onoforyja",
    "onogiwi", "onoodimuz", "onpyhuv", "onqijiwk", "onugydy", "onupt", "onuwake", "onuwufh",
    "onuzo", "onyn", "onyx", "onyyde", "onzu", "oobamb", "ooludiqug", "oopaezu",
    "oopagov", "oopu", "ooqlq", "ooqlqhyn", "ooteku", "ootiqe", "opaageqoo", "opedi",
    "opedu", "opeiciku", "opev", "ophivuge", "opia", "opib", "opnonu", "opoezege",
    "opohoveg", "opovid", "opqeih", "opqelap", "opqimeciw", "opumin", "opuro", "opuzip",
    "opxinxef", "opyg", "opymeqi", "opypuz", "opytie", "opyyuz", "oqahywik", "oqaq",
    "oqarca", "oqewuno", "oqidie", "oqirnin", "oqoehuszo", "oqohun", "oqohuyle", "oqoto",
    "oqqodewi", "oquc", "oqudoicuc", "oqyhv", "oqyuboro", "oracurooa", "oraraseci", "oraxkif",
    "orazuk", "oriho", "orina", "orir", "orit", "orome", "orowziz", "ortutug",
    "orukaww", "orun", "orup", "orvolisyk", "oryhyz", "oryjeo", "orynux", "oryvti",
    "osajoxaef", "osajswik", "osalyowoj", "osasy", "osezaduev", "osisqy", "osito", "osjubam",
    "osoaoc", "osot", "osowsb", "osrobo", "osubypo", "osucufa", "osuriviyh", "osync",
    "osyrduvy", "otaheacy", "otazyety", "otedelvuy", "otowol", "otpuozur", "otras", "otucusi",
    "oture", "oturenq", "otviifiw", "otyqyx", "ouelihev", "ougoteceg", "ounkofu", "oupulmuxy",
    "ouquwyr", "ourek", "ourjauwif", "ouromob", "ouska", "ouuygun", "ouvapine", "ouzod",
    "ovak", "ovavya", "ovbdeorid", "ovdykipa", "ovedem", "oveeh", "ovfi", "oviletju",
    "oviqatwyh", "ovomo", "ovoyfoa", "ovtur", "ovue", "ovueaq", "ovuvpic", "ovuxeylyz",
    "ovweraade", "ovyacwl", "ovyki", "ovymhip", "owbiv", "owed", "oweduw", "oweql",
    "owez", "owibu", "owieyryx", "owigf", "owlwuycy", "owoeq", "owolemu", "owovihgu",
    "owoxarix", "owqegave", "owsy", "owurle", "owyb", "owyge", "owyoyr", "owysyy",
    "oxacy", "oxap", "oxaqyzexu", "oxebiq", "oxef", "oxeh", "oxektulim", "oxfeuw",
    "oxgecih", "oximitysi", "oxopciy", "oxueguzew", "oxufa", "oxug", "oxumyp", "oxut",
    "oxuwoata", "oxvubew", "oxyqynu", "oxzum", "oyatriliq", "oyaw", "oycyt", "oygbxeyt",
    "oygyt", "oyhobejeg", "oymyiga", "oypy", "oypzyhal", "oyru", "oysybe", "oyudioku",
    "oyvnuyas", "oyweriga", "ozak", "ozatihupo", "ozaweruy", "ozeinuzo", "ozeugate", "ozho",
    "oziho", "ozilob", "oziqy", "oziupj", "ozizek", "ozorefyt", "ozowfiq", "ozoxdy",
    "ozuhu", "ozuk", "ozulepeny", "ozyfihute", "ozyrifi", "paerup", "pafyja", "pajo",
    "paqykum", "paroz", "pasoxoin", "pavoryco", "pawuby", "paznulo", "pdoa", "pdvetur",
    "pefabilyn", "pefoxo", "pehuxotue", "pekusy", "pemas", "pemowu", "pemuluhel", "peopigobe",
    "peqeihoj", "perynur", "pesi", "pesp", "petkiwypi", "peub", "pevobdev", "pfoyqyr",
    "pgelynro", "pgiz", "piawyh", "pibuhyfrj", "pibumy", "piby", "pigepej", "pihsoru",
    "piigesio", "pijg", "pimypogid", "pinifid", "pinini", "pioe", "pipuuga", "piqywoxym",
    "pisez", "pissdaj", "pisva", "pivu", "pixydmy", "piyh", "pizyjke", "pjyfkteqy",
    "plqtoly", "plusudyi", "plzehic", "pmicyz", "pocyholi", "pocyhues", "pogaqa", "pohalap",
    "pohi", "pojohb", "pokiwymuz", "pokufvo", "polucuki", "poluzodg", "pomaosyze", "pomyfeure",
    "ponego", "pooiga", "poom", "popi", "poqimaru", "poqomi", "poraiqil", "posk",
    "posuwepa", "potahysu", "pouciol", "poxe", "poxgpinat", "poxoqf", "ppioda", "preqara",
    "prohada", "prunux", "psoaydywo", "ptpigeko", "puamuofac", "pubdaqa", "pubysapqo", "pucej",
    "puhaxehyk", "pulae", "pumy", "pusynid", "putubylu", "puvaudawy", "puwcoju", "puxovaju",
    "puyitso", "puztag", "pvimekik", "pxaze", "pyber", "pycihih", "pycyu", "pyjdem",
    "pyjidiri", "pylugcin", "pyly", "pymolym", "pymutne", "pymybuwaf", "pynuti", "pyqoh",
    "pysitirin", "pysouqnuq", "pysweado", "pytado", "pyvyg", "pywa", "pywejsaca", "pywogam",
    "pyxiax", "pyxuhygvf", "pyzabexo", "pyzyki", "qabymef", "qace", "qadagugu", "qade",
    "qadexy", "qadyke", "qagihlefy", "qakaa", "qakoesxa", "qamauoj", "qamenoddy", "qamrum",
    "qane", "qapyzuhu", "qasyzitil", "qatucony", "qavoumo", "qawcy", "qaxapeg", "qaxlie",
    "qazebal", "qcogic", "qdeji", "qdixji", "qeef", "qeejybra", "qelu", "qenynhu",
    "qeodirudy", "qepa", "qepi", "qerofax", "qerokapu", "qeryb", "qesiwi", "qesyx",
    "qevomyxur", "qevu", "qevuz", "qewydejw", "qexeveh", "qfrcetaho", "qgoykuri", "qhatawti",
    "qheki", "qheqexywy", "qhouqyuk", "qibetiku", "qicyhiqoz", "qidunov", "qikewa", "qikobibji",
    "qilabicub", "qilzujmue", "qimifi", "qimob", "qinir", "qiop", "qiso", "qitiduiw",
    "qiwelii", "qiwiot", "qiyqaxa", "qizi", "qjarac", "qjebujki", "qjytqiry", "qkakis",
    "qkoxe", "qkudy", "qkuury", "qmyedo", "qnyj", "qobumiv", "qodvarau", "qoeg",
    "qoggum", "qoghs", "qohihyy", "qoqymy", "qotadepid", "qowe", "qoxytyf", "qoyhhy",
    "qqyb", "qrexo", "qrxo", "qtju", "qucyhef", "qudi", "quferowy", "qufjyed",
    "qufow", "quhaz", "quhik", "quigop", "qujifogru", "quko", "qunaygon", "qupoxy",
    "qupwul", "quqdymyw", "qutaqajae", "qutyh", "qutysy", "quuput", "quvatuobu", "quvqiva",
    "quwu", "quzeho", "quzi", "qveqi", "qvoaeceek", "qwibonu", "qwuzhyuq", "qxaqixi",
    "qycoulul", "qydef", "qydyjethe", "qyenouz", "qyfiqi", "qyjo", "qykd", "qylazoguz",
    "qylo", "qynabreoz", "qynzyu", "qyqohn", "qyqxewuqy", "qyraqoi", "qyrbetyea", "qysut",
    "qyte", "qyto", "qytoasus", "qyua", "qyycavuf", "qyzegir", "qzykydahe", "raaofudok",
    "radocapi", "rafep", "rafi", "rafk", "rafo", "ragoht", "raisodegy", "rakafumur",
    "rakegus", "ramamwis", "ramys", "ranf", "raoj", "rapo", "raqigu", "rarav",
    "rarenin", "raroyaovo", "rasy", "ratioypan", "ratyv", "rawacoruf", "raxibvej", "rebseheb",
    "recohhyw", "reepn", "regaryteg", "reiszizoc", "rejemod", "rejg", "rejyseg", "rekamyte",
    "reliti", "reloseyxe", "rema", "remo", "renajad", "repef", "repejire", "retatiewo",
    "reuzia", "reve", "rewgiktv", "rewipivy", "rewuwo", "reybesoyb", "reyg", "rezoweil",
    "rezycf", "ribycug", "ricohyz", "rieje", "rifogano", "rifquoku", "rifyq", "rihe",
    "riju", "rikioty", "rikiqe", "rimei", "rimiwu", "rina", "rinebi", "rini",
    "ripo", "riqak", "riqeypc", "riqqn", "risesodib", "rishefuri", "ritehac", "riwiosy",
    "riwivy", "rkepyro", "rlget", "rmoahitur", "rnih", "rnumu", "roifif", "rojyw",
    "ronso", "rorui", "rotdyp", "rothy", "rouwsogi", "rovadizew", "rovex", "rovuy",
    "rowohy", "rozama", "rryqyt", "rubkuyp", "rucsur", "rucxec", "rudeubelu", "rudez",
    "ruepasec", "rugybek", "rukjskd", "rulwe", "rulykn", "rupape", "ruqu", "ruseumex",
    "rusih", "ruvcaveji", "ruvi", "ruzoha", "rvykew", "rvyto", "rwipi", "rybx",
    "rycoxvej", "ryhea", "ryhxera", "ryjuff", "rykox", "rylatuus", "rynaojy", "ryniv",
    "ryqo", "ryukaq", "ryxox", "ryxuddt", "saatrd", "saayc", "sacagymej", "sackihdo",
    "saewap", "sagikoxa", "sagufh", "saheai", "sahehiwar", "sanugygu", "saoygy", "sapany",
    "saqoge", "sasarov", "sausy", "sawxocg", "sayow", "scutok", "sdudjavii", "sdyqym",
    "sebapgehu", "sebfebasa", "secodiqo", "sedasarur", "sege", "sekasef", "selomyly", "semaf",
    "seovez", "seqyg", "setzo", "sewatyvd", "sewi", "seza", "sezer", "sgus",
    "shipoia", "shobolumu", "shubi", "siba", "sibqyj", "siduqijo", "sigalix", "sihucuavy",
    "sijuy", "sikuq", "silya", "silyvokyz", "sime", "sinotlm", "sioqyrze", "sipekugu",
    "sitatavoy", "sivyme", "skav", "slgu", "slomayj", "snov", "sobi", "soci",
    "sohhyac", "soin", "sojy", "sokiry", "soly", "soowipe", "sopopi", "soregira",
    "soutiogux", "soxif", "soyshqogg", "sozom", "sqde", "suapeizo", "sube", "suced",
    "suczici", "sudu", "sufyro", "sugo", "suhrany", "suhu", "sujyxro", "sukagi",
    "sulo", "sulojyw", "sulud", "suluvywiz", "sunucjv", "supe", "supogjy", "surua",
    "surykodis", "suteo", "suubv", "suufi", "suvepojo", "suwigiaa", "suwiw", "suwybib",
    "suwyx", "suxu", "suzaalq", "suzoyta", "sxityoc", "sxyjij", "sxypi", "syadat",
    "sybiqu", "syceq", "synahr", "synaqil", "syojaref", "sypoyicu", "syqruxiq", "sysad",
    "syserdep", "syvaxetm", "syydasyo", "syyqyuji", "tabepuizu", "taby", "taderifi", "tadxon",
    "tage", "tagy", "taikra", "taiscawbe", "takiboxez", "tanohok", "taodxyytp", "taquniik",
    "tasacydao", "tasavusi", "tasoctely", "tatug", "tauro", "taxojyb", "tayfy", "tazaqu",
    "tbvesyg", "tbybyce", "tcodymav", "tebu", "tecoexajo", "tefo", "tehit", "tejic",
    "tejkbgew", "tejuhamm", "tejyh", "tekeci", "tekeh", "temokgh", "tepakrytu", "tepwux",
    "tesasy", "tetaay", "tewpevul", "texeu", "tezyvyu", "thagadusy", "thysbowuf", "tidocuaxu",
    "tidoxebb", "tifaykoc", "tifetjaf", "tigjek", "tihedf", "tiix", "tijea", "tikq",
    "tiliz", "timiw", "tinol", "tipy", "tiqipe", "tirans", "tiru", "tirumyf",
    "titis", "tiuq", "tiwelwo", "tiwu", "tixkjyzuv", "tizi", "tjit", "tjuyd",
    "tkecireuc", "tlicelabi", "tlovylad", "tnopryru", "tobiqivf", "tofaiba", "togabyw", "toiqeryra",
    "tojabypo", "tojet", "tokarakah", "tokpeniho", "tokuusyda", "tonoryvo", "toradafa", "torth",
    "tosozodne", "totrae", "toulie", "touooxi", "towoxaa", "toyzeofoc", "tpucuwy", "tqovikhir",
    "tqowi", "trkawi", "truv", "tubacgic", "tudfnakko", "tugexebe", "tuhryx", "tuirem",
    "tujarur", "tujuomyza", "tulu", "tumiore", "tumnumil", "tupkurah", "tupuzan", "tuqava",
    "tuquwvr", "ture", "tusaufu", "tuta", "tuuqemez", "tuvoa", "tuvouw", "tuwelur",
    "tuxedmbui", "tvexydyde", "txamoxuek", "txyjego", "tyarem", "tyexyd", "tyjsiki", "tyluh",
    "tyniku", "tynj", "tyol", "typidx", "tysfpydas", "tysuguzur", "tyvqazbi", "tyvyak",
    "tywidycy", "tyxokisqi", "tyyagep", "tyyediro", "tyyvek", "tyzauaes", "tzut", "uadi",
    "uado", "uafen", "uagucy", "uajup", "uapacis", "uapxigu", "uaqel", "uaugeqp",
    "uawukuen", "uayhr", "ubafi", "ubare", "ubavx", "ubawroiyv", "ubel", "ubhsg",
    "ubibiquhi", "ubitof", "uboexu", "uboohagow", "uboxo", "ubuijue", "ubuswuhy", "ubuyl",
    "ubwpuwuwy", "ubylutuzu", "ubyryba", "ucahru", "ucasi", "uces", "uciqibe", "uciryg",
    "ucix", "ucooadid", "ucory", "ucryme", "ucuqeje", "ucutajuv", "ucyad", "ucye",
    "ucymo", "udafa", "udameunug", "udaq", "udaul", "udbu", "udeoj", "udipek",
    "udizi", "udkofa", "udokezipa", "udqit", "udubik", "udujojil", "udujy", "udun",
    "udus", "uduvy", "uduxad", "udyapy", "ueah", "ueciwyci", "uefe", "ueiqi",
    "ueixacuap", "uepu", "uesydosg", "uetenypcc", "uexubapyc", "ufanui", "ufaryqy", "ufaso",
    "ufaxydi", "ufeike", "ufesomega", "ufeusixa", "uffelahyq", "uffjyvu", "ufhunyjyu", "ufic",
    "ufimibe", "ufiovida", "ufmaxioja", "ufonnjesy", "ufony", "ufosiyne", "ufuiqhi", "ufur",
    "ufuz", "ufyvoicu", "ufyxua", "ufyzywo", "ugaty", "ugebyjeo", "ugele", "ugez",
    "ugfupegyc", "ugihv", "ugioqazeh", "ugixtcw", "ugizi", "ugntgpahn", "ugodux", "ugudehi",
    "ugufojug", "ugumiy", "ugypywow", "uhasygux", "uhejot", "uhelcmu", "uhfovyc", "uhhkitoin",
    "uhixu", "uhoqusud", "uhorwei", "uhuas", "uhunafydu", "uhuof", "uhus", "uhxos",
    "uhysoqnrj", "uhyx", "uiaa", "uibioq", "uidy", "uiebyzi", "uinegeeqm", "uiqebo",
    "uivede", "uiveeja", "uivkegao", "uivubejar", "uivyybicu", "uizemwy", "ujacoq", "ujahi",
    "ujdan", "ujex", "ujiwe", "ujno", "ujoici", "ujowtim", "ujqzvyohy", "ujsgix",
    "ujuba", "ujyirgasy", "ujykelpo", "ujyvavet", "ujyxab", "ukagm", "ukam", "ukcp",
    "ukeva", "ukixpe", "ukocuvyr", "ukokyl", "ukomyuva", "ukorefcx", "ukowim", "ukpume",
    "ukub", "ukuhyxaxi", "ukujigoj", "ukumezju", "ukyd", "ukyhejaqy", "ukymelih", "ukyze",
    "ulahifi", "ulenarva", "ulih", "ulij", "uljyabnur", "ulod", "uloldysc", "ulonyuocx",
    "ulpyjibu", "ulucsisyx", "ulul", "ululavaa", "uluqap", "uluxyvnam", "ulwiribim", "ulwobavej",
    "ulydog", "ulyhiru", "ulyl", "ulynaoh", "ulypis", "ulyqtanev", "umaru", "umaxoeb",
    "umea", "umedhih", "umelud", "umeryn", "umiby", "umidymnyw", "umihe", "umio",
    "umipyf", "umitefaok", "umoheh", "umouvyubu", "umqyny", "umsouofyw", "umyj", "umyk",
    "umyx", "unediru", "unes", "uniguesht", "unipihy", "uniqomew", "unixeruxy", "unom",
    "unopsu", "unowejbt", "unuh", "unulajp", "unulekaev", "unydef", "unysnot", "uocep",
    "uocu", "uofa", "uomudag", "uonyhozo", "uoub", "uowa", "uoyq", "upaybut",
    "upbbo", "upev", "uphydyvii", "upii", "upiygynec", "upoj", "upol", "upqohu",
    "upryq", "upua", "upugufiz", "upuvitior", "upyhado", "upyveura", "upyx", "uqanyd",
    "uqar", "uqarec", "uqeehil", "uqegevywu", "uqifc", "uqiwikoq", "uqof", "uqoj",
    "uqovem", "uquotodyq", "uquuru", "uquv", "uqzesn", "uraa", "urai", "urapy",
    "uravkini", "uremu", "ureqjxe", "urese", "urexan", "urioydyne", "uriv", "urlop",
    "uroelyv", "urofamyid", "urreufg", "urutybo", "urxra", "urytupapy", "uryyso", "usac",
    "usaivi", "usedhie", "usenucu", "usesuedy", "useto", "useylviwu", "ushiceqo", "usimykoqi",
    "usin", "usixet", "usmowec", "usnddats", "usotosw", "usoxel", "usoz", "usry",
    "usugypet", "usuj", "usulqu", "usykaz", "usyuhajy", "usyzanepe", "utac", "utacibucu",
    "utejeq", "uterabr", "utevek", "utexte", "utgotuwuo", "utinakox", "utipoduj", "utleb",
    "utoumelyf", "utozijopi", "utuf", "utufeaz", "utufusysy", "utuiyoa", "utunasot", "utunubvo",
    "utuyo", "utuziri", "utxib", "utydivoh", "uucomr", "uudifowyx", "uudrog", "uufeteyk",
    "uula", "uulehuguf", "uuluep", "uumobymnu", "uuqimqybi", "uuxa", "uvaksei", "uvap",
    "uvasi", "uvaufolaq", "uvegan", "uvogfuo", "uvokec", "uvovuroje", "uvson", "uvybuqyc",
    "uvysoozcx", "uvzugoqay", "uwaju", "uwedmici", "uwehu", "uweln", "uwesy", "uwikuw",
    "uwon", "uwumeb", "uwyfugeva", "uwyk", "uwykace", "uwypwyrx", "uxanyooci", "uxaqyb",
    "uxate", "uxazi", "uxenaju", "uxfazjy", "uxgukyqa", "uxicyni", "uxoce", "uxohues",
    "uxoov", "uxtybaryx", "uxucemad", "uxufa", "uxyerikez", "uxyfyfepo", "uxyhleqpy", "uxynesomi",
    "uxyqoke", "uxytougot", "uxzukuize", "uyajymezi", "uydnofeb", "uygejudxm", "uyhamf", "uykaanoo",
    "uylmodu", "uyodylev", "uyravot", "uyrehyi", "uyumy", "uyxituv", "uyxuorse", "uzatu",
    "uzawdi", "uzefidvo", "uzeloz", "uzemuhu", "uzes", "uzev", "uzianih", "uzig",
    "uzigufis", "uziqpa", "uzuhu", "uzycujaic", "vaayo", "vabyxuetr", "vacygyt", "vadax",
    "vadigimut", "vafyxam", "vaga", "vagymu", "vajiwa", "vakepezyg", "vaoettyl", "vape",
    "vaquga", "varikiar", "vatuzavyl", "vawitu", "vaworao", "vebu", "veceuj", "veci",
    "vedem", "vedyrb", "veelrho", "veepeqza", "vefenapea", "vefob", "vehucu", "veipo",
    "vekticyez", "vere", "verixinae", "vesuheqiq", "vetu", "vevarcaf", "vexi", "vexiwafyt",
    "vexoy", "vezujoj", "vfui", "vgomob", "vhotemab", "vhotenawo", "vibyuwu", "vicvyv",
    "videexa", "videtngaw", "vigabake", "vigi", "vijb", "vijixikuq", "vikegou", "vilarrep",
    "vimmuv", "viriceari", "visenow", "vitykc", "viur", "vixuduq", "vixyvuka", "vjahodlet",
    "vjygu", "vlfepot", "vluj", "vmoweeu", "vmyneqof", "voalicno", "vobafa", "vodere",
    "vofb", "vofiutiz", "vofodaci", "voganyavi", "vohasq", "vohatohqi", "vokemidec", "vomkenlac",
    "vonuvumyk", "vosus", "votidof", "vovysa", "vowivot", "voyn", "voyqthuca", "vpicufg",
    "vsofuuk", "vteji", "vuab", "vuhof", "vuin", "vujaly", "vujeweuge", "vukhiuca",
    "vuku", "vunqyykui", "vuocapuq", "vuqukam", "vuradozi", "vutawra", "vute", "vuuvage",
    "vuwogyx", "vuwov", "vuxo", "vuxuzyxe", "vuzypax", "vvyre", "vybluceyk", "vyca",
    "vyej", "vyewiujf", "vyezogapy", "vyfay", "vyhefuuc", "vyigzock", "vykucupvm", "vylan",
    "vylqipo", "vymaqewoc", "vyqiru", "vysefi", "vywoiz", "vyxipopeh", "vyxisa", "vziubi",
    "wacusy", "wafpedb", "wagepujee", "wahoc", "waira", "wami", "wamogu", "waoowuz",
    "wapyco", "waveexo", "wawu", "waxmk", "waxube", "wdypuru", "weabyf", "weced",
    "wecucfol", "wededurut", "wedipogiz", "weezobacu", "wegewy", "weneuvo", "wenuqap", "werdinaxi",
    "weroi", "werxtuwet", "wesa", "wevoja", "wewiveqx", "weypo", "wezo", "wezosywin",
    "wfaiilo", "wfamif", "wfun", "wgowowuny", "wheh", "whowu", "wicyvose", "wifdi",
    "wifepibu", "wigewd", "wigoh", "wikbehyow", "wimaxywo", "wimyvyxo", "wipuq", "wiubc",
    "wiva", "wiwix", "wiwuk", "wizdixu", "wjytoroft", "wkify", "wkuno", "wleyfys",
    "wluci", "wmatbus", "wmyisys", "wnityacfy", "wnpecfiet", "woaov", "wobucy", "wodi",
    "woje", "wojosbet", "wokaoe", "wolo", "wooqexdor", "wootaqod", "wosep", "wosozek",
    "wosul", "wovywaqa", "woximimua", "woyqip", "wpiiy", "wqodogty", "wquatyjoh", "wqufoafw",
    "wrihacybu", "wsimih", "wuapk", "wuefymoje", "wugduinod", "wugy", "wuje", "wujipopyq",
    "wujoj", "wujucee", "wujupyn", "wukiyw", "wulif", "wumu", "wuoo", "wupa",
    "wuqy", "wusafeybi", "wutanuvuv", "wutyefh", "wutysy", "wuvvuceh", "wuzo", "wuzut",
    "wvoh", "wvyrwui", "wwuku", "wxkevic", "wxopeqyd", "wyaka", "wyamiv", "wybecizu",
    "wybeku", "wybiqiqes", "wycuquh", "wyehxaf", "wyhym", "wyidatiw", "wykfud", "wylikis",
    "wyluli", "wyozig", "wyqedogik", "wysozav", "wyvb", "wywiju", "wywocivs", "wywoko",
    "wyxa", "wyxem", "wyximyz", "wyxual", "xagysbuje", "xahic", "xaiavip", "xaivywzu",
    "xajoqel", "xalujzeny", "xamc", "xamote", "xanyfw", "xapotis", "xarnoukom", "xata",
    "xatimioke", "xawaholta", "xawohtepo", "xawuzaq", "xaxaennp", "xazajyvet", "xazymuxi", "xbiofer",
    "xcgyitobo", "xdew", "xeepa", "xejilmop", "xekave", "xekefex", "xelaholic", "xenase",
    "xeqinifew", "xercunu", "xeva", "xewecy", "xexa", "xfepon", "xhotyqaf", "xiajuj",
    "xibonaswu", "xifyxas", "xihypy", "xikua", "ximetuv", "xipe", "xiqisake", "xirakezet",
    "xisefab", "xissgax", "xitetyun", "xiudyx", "xivuy", "xiwo", "xlujyvu", "xlyve",
    "xnajo", "xnvcut", "xoav", "xodaxyr", "xodronin", "xodyi", "xofote", "xohaxaqn",
    "xohebo", "xoivuhyh", "xoka", "xokukoza", "xopnexo", "xoqifun", "xoqo", "xosiki",
    "xoyveu", "xozagyf", "xqkaodoy", "xresag", "xryvxyw", "xsinyevu", "xtuoawj", "xucupebo",
    "xuev", "xukap", "xukxij", "xunobef", "xuoxyym", "xuqfq", "xuqox", "xusy",
    "xuvi", "xuzoliby", "xwyo", "xxage", "xxede", "xxiroxy", "xybii", "xyek",
    "xyfufovub", "xyguhoh", "xyhaxaju", "xyhotaj", "xykansoca", "xyky", "xymenu", "xyneq",
    "xynoip", "xyqmip", "xyruwij", "xyso", "xysukre", "xyta", "xywi", "xywobi",
    "xyxidu", "xyyvywu", "xyzaz", "xyzcomae", "xyze", "yacelor", "yaduje", "yafu",
    "yagufyn", "yahoxegv", "yaibate", "yalavucyj", "yatubifut", "yauuiqa", "yaxfiba", "yayaloz",
    "ybabivyd", "ybakvnel", "ybel", "ybev", "ybig", "ybihavy", "ybilutu", "ybivaxyg",
    "yblao", "ybodyezoj", "yboqcolae", "ybqau", "ybqyw", "ybule", "ybuya", "ybycebo",
    "ybyjywo", "ybykiy", "ybyt", "ybyutopb", "ycabwug", "ycacjvaia", "ycakiryj", "ycel",
    "ycifb", "ycoa", "ycocofofy", "ycpy", "ycpyz", "ycreb", "ycuazih", "ycun",
    "ycutoryt", "ycuzakrih", "ycykyfbyd", "ycywa", "ydadibuki", "ydaxy", "ydef", "ydeuryey",
    "ydexupran", "ydeys", "ydhyses", "ydicu", "ydir", "ydobukecu", "ydodobee", "ydsozuj",
    "ydupur", "yduqupe", "yduqyg", "ydygac", "ydyjbaul", "ydykuz", "yeduhsu", "yeduxyve",
    "yefeto", "yefohy", "yeguu", "yehu", "yejukuyky", "yempaivle", "yeqf", "yercurupa",
    "yetakiir", "yfab", "yfadvjoz", "yfenaxido", "yfihidu", "yfijeyso", "yfin", "yfiojan",
    "yfiquddu", "yfiv", "yfixasifa", "yfotyn", "yfovlubar", "yfozu", "yfynynzo", "yfypdap",
    "yfyx", "yfza", "ygcood", "ygdozom", "ygeden", "ygesaryte", "ygez", "ygiqavwci",
    "ygobate", "ygucju", "ygulojar", "ygunozkup", "ygxuxaqyl", "ygycuzu", "ygyhumaw", "ygyisaky",
    "ygyko", "ygyqofy", "ygyracpu", "ygytog", "yhady", "yhafn", "yhalrudhy", "yhenygwol",
    "yhixirueh", "yhnxa", "yhofira", "yhogkot", "yhook", "yhoti", "yhow", "yhoxazuou",
    "yhoyvuw", "yhubagic", "yhyhuag", "yhyq", "yhyqije", "yhyvyzicu", "yibyqo", "yifios",
    "yigird", "yigo", "yilefrida", "yioce", "yiqt", "yiqyp", "yizob", "yjaq",
    "yjaqion", "yjatohha", "yjaxiybim", "yjaxovun", "yjeb", "yjekiacex", "yjogevy", "yjome",
    "yjrolub", "yjuvofi", "yjxyc", "yjydaimtu", "yjyheupdi", "yjyifyc", "yjyme", "ykacy",
    "ykah", "ykauequcu", "ykauwoh", "ykawaqy", "ykehu", "ykiyrehi", "yknifycr", "ykohi",
    "ykufylaw", "ykuh", "ykut", "ykyjowugo", "ykysm", "ykyxeuda", "ylatyis", "ylevyl",
    "ylgi", "ylixosucy", "yljido", "ylndepai", "ylued", "ylugaiu", "yluxu", "ylxayal",
    "ylybeg", "ylyeziazu", "ylytyru", "ylzp", "ylzyve", "ymao", "ymasruudf", "ymay",
    "ymibuce", "ymicov", "ymidos", "ymigy", "ymikes", "ymir", "ymmyzel", "ymokaj",
    "ymokc", "ymoq", "ymorlyuzo", "ymosil", "ymuahyqi", "ymubixiv", "ymyb", "ymyfe",
    "ymygh", "ymyjyuku", "ymykibof", "ymyqst", "ynadao", "ynalepiq", "yned", "ynedu",
    "ynelixah", "ynihuil", "ynilexyr", "ynillynil", "ynilo", "ynmehwoqi", "ynolqifup", "ynrvazi",
    "ynugtu", "ynunb", "ynuoce", "ynuypobb", "ynzok", "yobane", "yocoy", "yomeqavx",
    "yoqyj", "yoro", "yotogybe", "yowypkib", "ypag", "ypagezeti", "ypaox", "ypaqoge",
    "ypef", "ypefadcy", "ypeqeyw", "ypeyx", "ypigowekb", "ypinexuet", "ypipo", "ypisenme",
    "ypliq", "ypmyky", "ypmyquler", "ypnez", "ypoekyjem", "ypovyloxa", "ypufco", "ypuh",
    "ypuiqqoz", "ypujais", "ypulu", "ypuyjtgit", "ypvymyxo", "ypybox", "yqahavovy", "yqajix",
    "yqbo", "yqdeu", "yqecco", "yqeh", "yqihun", "yqixig", "yqoh", "yqolikzy",
    "yqop", "yqotel", "yqoxuma", "yqudobaib", "yqudoj", "yquhe", "yqupy", "yqyd",
    "yqyilenoh", "yqymtdw", "yqypi", "yqyses", "yraiexlo", "yrak", "yramyhubo", "yrawqeiuq",
    "yreponofa", "yreron", "yresisei", "yreu", "yrezuzzbr", "yridul", "yrivapuan", "yroji",
    "yrojo", "yroryja", "yrow", "yrrygego", "yruf", "yrufuvyqy", "yryjfy", "yrymubiun",
    "ysadovy", "ysexyy", "ysiguberu", "ysij", "ysiqi", "ysoxibyz", "ysum", "ysuqajoly",
    "ysuz", "yswuvupyt", "ysymofico", "ytaggedi", "ytapreji", "ytdizeli", "yteosr", "yteraob",
    "ytigynyh", "ytini", "ytizuguke", "ytkak", "ytob", "ytobye", "ytofayyic", "ytomy",
    "ytowan", "ytoymiq", "ytry", "ytuvac", "ytuziq", "ytymajeu", "ytymip", "ytzapga",
    "yubfahue", "yuilon", "yumie", "yunuse", "yuropnaj", "yurukojy", "yutefywe", "yuvowamya",
    "yuximgys", "yvamv", "yvase", "yvasil", "yvavofoje", "yvcewuzyj", "yvhoiu", "yviakabym",
    "yvijia", "yviloeop", "yvirale", "yvoorikoj", "yvosor", "yvucebaw", "yvygabu", "yvyksyk",
    "yvymy", "yvyq", "ywayha", "ywcssi", "ywdu", "ywdydoc", "ywecyg", "ywejidud",
    "ywerum", "ywhia", "ywifga", "ywimyk", "ywiozagy", "ywiplo", "ywoke", "ywuan",
    "ywujega", "ywyiyxo", "ywyn", "ywynobyze", "ywyt", "ywyugzne", "yxacy", "yxedoahoq",
    "yxipke", "yxom", "yxqos", "yxtkresoq", "yxuguqy", "yxyadyvi", "yyfep", "yyjajelip",
    "yyop", "yysigyma", "yyso", "yyvureqam", "yyzaboxi", "yzcim", "yzenxiany", "yzgyhot",
    "yzidocavu", "yzodazzuk", "yzowa", "yzudiso", "yzulere", "yzuv", "yzydeb", "yzytoh",
    "yzyvxi", "yzyz", "zaaje", "zaaketomu", "zabahiy", "zacmawi", "zady", "zafdebil",
    "zaguyt", "zahjizime", "zajymama", "zakeu", "zako", "zakxu", "zaladajri", "zalozuvo",
    "zalukeral", "zanek", "zanucroda", "zaosu", "zapex", "zaqgenu", "zaretj", "zaruwom",
    "zawoler", "zeado", "zeapi", "zeaxkfir", "zebyna", "zefxy", "zegak", "zegliw",
    "zehexaxi", "zehosal", "zehosoah", "zejo", "zeksany", "zeluok", "zeooky", "zepupera",
    "zepyt", "zery", "zetyhotem", "zewi", "zexole", "zeyiqok", "zeziz", "zguqolinl",
    "zhefip", "zhnigxi", "zibu", "zibyt", "zicagefyl", "zidi", "zifiwuq", "zifoj",
    "zihetiwo", "ziida", "ziifevaz", "ziirowyp", "zikiroh", "zikug", "zinamoim", "zinyely",
    "zipukohox", "ziqbel", "ziqgy", "ziqutais", "ziruvupxe", "zitefha", "ziti", "zivc",
    "ziwu", "zixosogyf", "zjlurgib", "zjygq", "zjyhojuv", "zmiqifez", "zmpi", "zniebedep",
    "zoce", "zofabani", "zogoehe", "zoji", "zokada", "zonuara", "zopxufx", "zosnnean",
    "zotoos", "zovyxuibi", "zozena", "zozu", "zpoiceiwu", "zpua", "zryk", "ztegapiip",
    "zuacyi", "zubamywuy", "zubo", "zudeseu", "zueve", "zukej", "zula", "zulyliy",
    "zuoez", "zure", "zuroxin", "zurukkt", "zuxemo", "zuyurp", "zuzywyj", "zweni",
    "zwkucis", "zwuc", "zyahuzme", "zyci", "zyfwezej", "zyher", "zyhuwixu", "zyjol",
    "zykiwaqa", "zyltysui", "zynive", "zypif", "zypof", "zyqp", "zyrex", "zysocoleu",
    "zyte", "zywahf", "zywe", "zyxupax", "zyyfoygui", "zyza", "zyzive", "zzyexio",
};
}  // namespace

std::span<const char* const> synth_word_list() {
    return {kWords, std::size(kWords)};
}

}  // namespace newsflow
